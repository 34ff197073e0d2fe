#pragma once

// Iterated commutators, the conjugation identity g f g^-1 = [g,f] f, the
// expansion [ab,c] = [a,[b,c]][b,c][a,c], and truncated Magnus expansions
// giving lower-central-series depth certificates for free-letter words.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "monodromy/error.hpp"
#include "monodromy/free_word.hpp"
#include "monodromy/word.hpp"

namespace monodromy {

// Right-nested [w1,[w2,[...,[w_{k-1},w_k]...]]].
inline FreeWord iterated_commutator(const std::vector<FreeWord>& ws) {
  if (ws.empty()) throw DomainError("iterated commutator of an empty list");
  FreeWord acc = free_reduce(ws.back());
  for (std::size_t i = ws.size() - 1; i-- > 0;) acc = free_commutator(ws[i], acc);
  return acc;
}

inline bool delta_identity_check(const FreeProduct& p, const Word& g, const Word& f) {
  return p.conjugate(g, f) == p.multiply(p.commutator(g, f), f);
}

inline bool product_expansion_check(const FreeWord& a, const FreeWord& b, const FreeWord& c) {
  const FreeWord lhs = free_commutator(free_multiply(a, b), c);
  const FreeWord bc = free_commutator(b, c);
  FreeWord rhs = free_multiply(free_commutator(a, bc), bc);
  rhs = free_multiply(rhs, free_commutator(a, c));
  return lhs == rhs;
}

inline constexpr int kMaxMagnusDegree = 8;

// Truncated image of a free-group word under x -> 1 + X, x^-1 -> 1 - X + X^2 - ...
// Monomials are keyed by a base-(alphabet+1) code with digit t holding the
// (1-based) variable in position t.
class MagnusSeries {
 public:
  MagnusSeries(const FreeWord& w, int degree) : degree_(degree) {
    if (degree < 1 || degree > kMaxMagnusDegree)
      throw DomainError("Magnus truncation degree must be in 1.." + std::to_string(kMaxMagnusDegree));
    for (FreeLetter l : w) {
      auto s = free_symbol(l);
      if (std::find(alphabet_.begin(), alphabet_.end(), s) == alphabet_.end()) alphabet_.push_back(s);
    }
    std::sort(alphabet_.begin(), alphabet_.end());
    if (alphabet_.size() >= 255) throw DomainError("Magnus expansion alphabet too large");
    base_ = alphabet_.size() + 1;
    place_.assign(static_cast<std::size_t>(degree_) + 1, 1);
    for (int d = 1; d <= degree_; ++d) place_[d] = place_[d - 1] * base_;
    terms_.assign(static_cast<std::size_t>(degree_) + 1, {});
    terms_[0][0] = 1;
    for (FreeLetter l : w) multiply_letter(l);
  }

  int degree() const noexcept { return degree_; }

  // Coefficient of the monomial X_{s1} X_{s2} ... (symbols, not letters).
  long long coefficient(const std::vector<std::size_t>& monomial) const {
    if (monomial.size() > static_cast<std::size_t>(degree_)) return 0;
    std::uint64_t code = 0;
    for (std::size_t t = 0; t < monomial.size(); ++t) {
      auto it = std::find(alphabet_.begin(), alphabet_.end(), monomial[t]);
      if (it == alphabet_.end()) return 0;
      code += static_cast<std::uint64_t>(it - alphabet_.begin() + 1) * place_[t];
    }
    const auto& layer = terms_[monomial.size()];
    auto found = layer.find(code);
    return found == layer.end() ? 0 : found->second;
  }

  // Least d >= 1 with a nonzero degree-d term, if any up to the cap.
  std::optional<int> lowest_degree() const {
    for (int d = 1; d <= degree_; ++d)
      for (const auto& [code, c] : terms_[d])
        if (c != 0) return d;
    return std::nullopt;
  }

 private:
  static long long add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw DomainError("Magnus coefficient overflow");
    return r;
  }

  void multiply_letter(FreeLetter l) {
    const auto var = static_cast<std::uint64_t>(
        std::find(alphabet_.begin(), alphabet_.end(), free_symbol(l)) - alphabet_.begin() + 1);
    for (int d = degree_ - 1; d >= 0; --d) {
      for (const auto& [code, c] : terms_[d]) {
        if (c == 0) continue;
        std::uint64_t next = code;
        for (int j = 1; d + j <= degree_; ++j) {
          next += var * place_[d + j - 1];
          long long coeff = (l < 0 && j % 2 == 1) ? -c : c;
          auto& slot = terms_[d + j][next];
          slot = add(slot, coeff);
          if (l > 0) break;
        }
      }
    }
  }

  int degree_;
  std::vector<std::size_t> alphabet_;
  std::uint64_t base_ = 1;
  std::vector<std::uint64_t> place_;
  std::vector<std::unordered_map<std::uint64_t, long long>> terms_;
};

struct MagnusWeight {
  std::optional<int> weight;  // empty: no nonzero term up to `cap`
  int cap = 0;

  std::string to_string() const {
    return weight ? std::to_string(*weight) : ">= " + std::to_string(cap + 1);
  }
};

// Weight >= k certifies membership of w in the k-th lower central series
// term of the free group on its letters.
inline MagnusWeight magnus_weight(const FreeWord& w, int degree_cap) {
  MagnusSeries s(free_reduce(w), degree_cap);
  return {s.lowest_degree(), degree_cap};
}

// Free-letter spelling of a free-product word: each letter becomes a free
// symbol, numbered in first-appearance order, with a letter whose inverse was
// already seen spelled as that symbol's inverse. Any spelling gives a sound
// lower bound on lower-central-series depth.
inline FreeWord free_spelling(const FreeProduct& p, const Word& w) {
  std::map<Letter, FreeLetter> ids;
  std::size_t next = 0;
  FreeWord out;
  for (const Letter& l : w.letters) {
    auto it = ids.find(l);
    if (it == ids.end()) {
      FreeLetter fresh = free_letter(next++);
      Letter inv{l.factor, p.group(l.factor).inverse(l.elem)};
      it = ids.emplace(l, fresh).first;
      if (!(inv == l)) ids.emplace(inv, -fresh);
    }
    out.push_back(it->second);
  }
  return out;
}

}  // namespace monodromy
