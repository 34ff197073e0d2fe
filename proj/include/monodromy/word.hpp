#pragma once

// Reduced words in the free product G_1 * ... * G_n and the projection onto
// the direct product G_1 x ... x G_n.

#include <cctype>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "monodromy/error.hpp"
#include "monodromy/group.hpp"

namespace monodromy {

// factor is 0-based internally; the text syntax and printed output are 1-based.
struct Letter {
  std::size_t factor = 0;
  Element elem = 0;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

struct Word {
  std::vector<Letter> letters;

  bool empty() const noexcept { return letters.empty(); }
  std::size_t size() const noexcept { return letters.size(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

using ElementTuple = std::vector<Element>;

class FreeProduct {
 public:
  explicit FreeProduct(std::vector<FiniteGroup> groups) : groups_(std::move(groups)) {
    if (groups_.empty()) throw DomainError("free product needs at least one factor");
  }

  const std::vector<FiniteGroup>& groups() const noexcept { return groups_; }
  const FiniteGroup& group(std::size_t factor) const { return groups_.at(check_factor(factor)); }
  std::size_t arity() const noexcept { return groups_.size(); }

  std::vector<std::size_t> orders() const {
    std::vector<std::size_t> out;
    for (const auto& g : groups_) out.push_back(g.order());
    return out;
  }

  Word letter(std::size_t factor, Element elem) const { return reduce({{factor, elem}}); }

  // Merges adjacent same-factor letters and drops identities until the
  // sequence alternates. Stack-based, so a single pass suffices.
  Word reduce(const std::vector<Letter>& raw) const {
    Word out;
    out.letters.reserve(raw.size());
    for (const Letter& l : raw) push(out, l);
    return out;
  }

  Word reduce(const Word& w) const { return reduce(w.letters); }

  bool is_reduced(const Word& w) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Letter& l = w.letters[i];
      if (l.factor >= arity() || l.elem == 0 || l.elem >= groups_[l.factor].order()) return false;
      if (i > 0 && w.letters[i - 1].factor == l.factor) return false;
    }
    return true;
  }

  Word multiply(const Word& a, const Word& b) const {
    Word out = reduce(a);
    for (const Letter& l : b.letters) push(out, l);
    return out;
  }

  Word multiply(std::initializer_list<Word> ws) const {
    Word out;
    for (const Word& w : ws)
      for (const Letter& l : w.letters) push(out, l);
    return out;
  }

  Word invert(const Word& w) const {
    Word out;
    out.letters.reserve(w.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
      push(out, {it->factor, group(it->factor).inverse(it->elem)});
    return out;
  }

  // [a,b] = a b a^-1 b^-1
  Word commutator(const Word& a, const Word& b) const {
    return multiply({a, b, invert(a), invert(b)});
  }

  Word conjugate(const Word& g, const Word& w) const { return multiply({g, w, invert(g)}); }

  // Per-coordinate product of the letters of each factor, in word order.
  ElementTuple project(const Word& w) const {
    ElementTuple out(arity(), 0);
    for (const Letter& l : w.letters) out[check_factor(l.factor)] = group(l.factor).op(out[l.factor], l.elem);
    return out;
  }

  bool is_in_kernel(const Word& w) const {
    for (Element e : project(w))
      if (e != 0) return false;
    return true;
  }

  // Word literal: tokens joined by '*'. `x<i>^<k>` (or `x<i>`) is the k-th
  // power of element 1 of G_i, which is the generator x for C_n; `s<i>:<name>`
  // names an element directly; `1` is the identity.
  Word parse(const std::string& text) const {
    std::vector<Letter> raw;
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto number = [&](bool allow_sign) {
      std::size_t start = pos;
      bool neg = false;
      if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        neg = text[pos] == '-';
        ++pos;
      }
      std::size_t digits = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == digits) throw ParseError("expected a number", pos);
      if (pos - digits > 9) throw ParseError("number too large", start);
      long long v = std::stoll(text.substr(digits, pos - digits));
      return neg ? -v : v;
    };
    auto factor_index = [&](long long i, std::size_t at) {
      if (i < 1 || static_cast<std::size_t>(i) > arity())
        throw ParseError("factor index " + std::to_string(i) + " out of range 1.." +
                             std::to_string(arity()),
                         at);
      return static_cast<std::size_t>(i - 1);
    };
    skip_ws();
    if (pos == text.size()) return {};
    while (true) {
      skip_ws();
      if (pos >= text.size()) throw ParseError("expected a letter", pos);
      const std::size_t token_start = pos;
      const char c = text[pos];
      if (c == 'x') {
        ++pos;
        std::size_t f = factor_index(number(false), token_start);
        long long k = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          k = number(true);
        }
        const FiniteGroup& g = groups_[f];
        if (g.order() > 1) raw.push_back({f, g.power(1, k)});
      } else if (c == 's') {
        ++pos;
        std::size_t f = factor_index(number(false), token_start);
        if (pos >= text.size() || text[pos] != ':') throw ParseError("expected ':'", pos);
        ++pos;
        std::size_t end = text.find('*', pos);
        if (end == std::string::npos) end = text.size();
        std::string name = text.substr(pos, end - pos);
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
        auto e = groups_[f].find(name);
        if (!e)
          throw ParseError("no element named '" + name + "' in factor " + std::to_string(f + 1), pos);
        raw.push_back({f, *e});
        pos = end;
      } else if (c == '1') {
        ++pos;
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
      }
      skip_ws();
      if (pos == text.size()) break;
      if (text[pos] != '*') throw ParseError("expected '*'", pos);
      ++pos;
    }
    return reduce(raw);
  }

  // Inverse of parse: cyclic factors print as x<i>^<k>, others as s<i>:<name>.
  std::string format(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Letter& l = w.letters[i];
      if (i) out += '*';
      out += format_letter(l);
    }
    return out;
  }

  std::string format_letter(const Letter& l) const {
    const FiniteGroup& g = group(l.factor);
    if (!g.label().empty() && g.label()[0] == 'C')
      return "x" + std::to_string(l.factor + 1) + "^" + std::to_string(l.elem);
    return "s" + std::to_string(l.factor + 1) + ":" + g.name(l.elem);
  }

  // Uniform letters with no two consecutive factors equal; length is exact
  // unless every factor is trivial.
  template <class Rng>
  Word random_word(Rng& rng, std::size_t length) const {
    std::vector<std::size_t> usable;
    for (std::size_t i = 0; i < arity(); ++i)
      if (groups_[i].order() > 1) usable.push_back(i);
    Word w;
    if (usable.empty()) return w;
    for (std::size_t k = 0; k < length; ++k) {
      std::size_t f;
      do {
        f = usable[std::uniform_int_distribution<std::size_t>(0, usable.size() - 1)(rng)];
      } while (usable.size() > 1 && !w.empty() && w.letters.back().factor == f);
      if (usable.size() == 1 && !w.empty()) break;
      auto e = std::uniform_int_distribution<Element>(
          1, static_cast<Element>(groups_[f].order() - 1))(rng);
      w.letters.push_back({f, e});
    }
    return w;
  }

  // A random word of length <= max_length - arity followed by the
  // per-coordinate correction that moves it into the kernel.
  template <class Rng>
  Word random_kernel_word(Rng& rng, std::size_t max_length) const {
    std::size_t body = max_length > arity() ? max_length - arity() : 0;
    std::size_t len = std::uniform_int_distribution<std::size_t>(0, body)(rng);
    Word w = random_word(rng, len);
    ElementTuple p = project(w);
    for (std::size_t i = 0; i < arity(); ++i) push(w, {i, groups_[i].inverse(p[i])});
    return w;
  }

  friend bool operator==(const FreeProduct& a, const FreeProduct& b) { return a.groups_ == b.groups_; }

 private:
  std::size_t check_factor(std::size_t f) const {
    if (f >= groups_.size())
      throw DomainError("factor index " + std::to_string(f + 1) + " out of range 1.." +
                        std::to_string(groups_.size()));
    return f;
  }

  void push(Word& w, const Letter& l) const {
    const FiniteGroup& g = group(l.factor);
    if (l.elem >= g.order())
      throw DomainError("element index " + std::to_string(l.elem) + " out of range for factor " +
                        std::to_string(l.factor + 1));
    if (l.elem == 0) return;
    if (!w.letters.empty() && w.letters.back().factor == l.factor) {
      Element merged = g.op(w.letters.back().elem, l.elem);
      if (merged == 0)
        w.letters.pop_back();
      else
        w.letters.back().elem = merged;
    } else {
      w.letters.push_back(l);
    }
  }

  std::vector<FiniteGroup> groups_;
};

}  // namespace monodromy
