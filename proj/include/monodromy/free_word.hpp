#pragma once

// Words in a free group on abstract symbols. Symbol k (0-based) is encoded
// as the letter k+1, its inverse as -(k+1).

#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "monodromy/error.hpp"

namespace monodromy {

using FreeLetter = int;
using FreeWord = std::vector<FreeLetter>;

inline FreeLetter free_letter(std::size_t symbol, int sign = 1) {
  auto l = static_cast<FreeLetter>(symbol + 1);
  return sign < 0 ? -l : l;
}

inline std::size_t free_symbol(FreeLetter l) { return static_cast<std::size_t>(std::abs(l)) - 1; }

// Appends `l` to an already reduced word, cancelling against the tail.
inline void free_push(FreeWord& w, FreeLetter l) {
  if (l == 0) throw DomainError("free letter 0 is not a symbol");
  if (!w.empty() && w.back() == -l)
    w.pop_back();
  else
    w.push_back(l);
}

inline FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (FreeLetter l : w) free_push(out, l);
  return out;
}

inline bool is_freely_reduced(const FreeWord& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == -w[i + 1]) return false;
  for (FreeLetter l : w)
    if (l == 0) return false;
  return true;
}

inline FreeWord free_multiply(const FreeWord& a, const FreeWord& b) {
  FreeWord out = free_reduce(a);
  for (FreeLetter l : b) free_push(out, l);
  return free_reduce(out);
}

inline FreeWord free_inverse(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (auto& l : out) l = -l;
  return out;
}

// [a,b] = a b a^-1 b^-1
inline FreeWord free_commutator(const FreeWord& a, const FreeWord& b) {
  FreeWord out;
  for (FreeLetter l : a) free_push(out, l);
  for (FreeLetter l : b) free_push(out, l);
  for (FreeLetter l : free_inverse(a)) free_push(out, l);
  for (FreeLetter l : free_inverse(b)) free_push(out, l);
  return out;
}

// Replaces each symbol by a word (and each inverse symbol by its inverse).
inline FreeWord free_substitute(const FreeWord& w, const std::vector<FreeWord>& images) {
  FreeWord out;
  for (FreeLetter l : w) {
    const std::size_t s = free_symbol(l);
    if (s >= images.size())
      throw DomainError("symbol " + std::to_string(s) + " has no image");
    if (l > 0)
      for (FreeLetter x : images[s]) free_push(out, x);
    else
      for (auto it = images[s].rbegin(); it != images[s].rend(); ++it) free_push(out, -*it);
  }
  return out;
}

// "s1*s2^-1" style rendering; the empty word prints as "1".
inline std::string free_word_to_string(const FreeWord& w,
                                       const std::function<std::string(std::size_t)>& name) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    out += name(free_symbol(w[i]));
    if (w[i] < 0) out += "^-1";
  }
  return out;
}

}  // namespace monodromy
