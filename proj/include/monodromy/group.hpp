#pragma once

// Finite groups given by Cayley tables. Element 0 is always the identity.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "monodromy/error.hpp"

namespace monodromy {

using Element = std::uint32_t;

class FiniteGroup {
 public:
  // Validates all axioms; associativity is checked exhaustively when
  // order <= kAssociativityCheckLimit.
  static constexpr std::size_t kAssociativityCheckLimit = 256;

  FiniteGroup(std::vector<std::vector<Element>> table, std::vector<std::string> names,
              std::string label = {})
      : table_(std::move(table)), names_(std::move(names)), label_(std::move(label)) {
    validate();
    inverse_.resize(order());
    for (Element a = 0; a < order(); ++a)
      for (Element b = 0; b < order(); ++b)
        if (table_[a][b] == 0) inverse_[a] = b;
  }

  std::size_t order() const noexcept { return table_.size(); }
  const std::string& label() const noexcept { return label_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Element a) const { return names_.at(check(a)); }
  const std::vector<std::vector<Element>>& table() const noexcept { return table_; }

  static constexpr Element identity() noexcept { return 0; }

  Element op(Element a, Element b) const { return table_[check(a)][check(b)]; }
  Element inverse(Element a) const { return inverse_[check(a)]; }

  std::size_t element_order(Element a) const {
    check(a);
    std::size_t d = 1;
    for (Element x = a; x != 0; x = table_[x][a]) ++d;
    return d;
  }

  Element power(Element a, long long k) const {
    check(a);
    auto n = static_cast<long long>(element_order(a));
    k %= n;
    if (k < 0) k += n;
    Element x = 0;
    for (long long i = 0; i < k; ++i) x = table_[x][a];
    return x;
  }

  std::optional<Element> find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<Element>(it - names_.begin());
  }

  bool is_abelian() const {
    for (Element a = 0; a < order(); ++a)
      for (Element b = 0; b < a; ++b)
        if (table_[a][b] != table_[b][a]) return false;
    return true;
  }

  // Renumbers elements so that new index k is the old element named
  // `order[k]`. The first name must be the identity.
  FiniteGroup relabeled(const std::vector<std::string>& new_order) const {
    if (new_order.size() != order())
      throw DomainError("relabel list has " + std::to_string(new_order.size()) +
                        " names, group has order " + std::to_string(order()));
    std::vector<Element> old_of(order());
    std::vector<Element> new_of(order(), static_cast<Element>(order()));
    for (std::size_t k = 0; k < order(); ++k) {
      auto e = find(new_order[k]);
      if (!e) throw DomainError("relabel list names unknown element '" + new_order[k] + "'");
      if (new_of[*e] != order()) throw DomainError("relabel list repeats '" + new_order[k] + "'");
      old_of[k] = *e;
      new_of[*e] = static_cast<Element>(k);
    }
    if (old_of[0] != 0) throw DomainError("relabel list must start with the identity");
    std::vector<std::vector<Element>> t(order(), std::vector<Element>(order()));
    for (std::size_t a = 0; a < order(); ++a)
      for (std::size_t b = 0; b < order(); ++b) t[a][b] = new_of[table_[old_of[a]][old_of[b]]];
    return FiniteGroup(std::move(t), new_order, label_);
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.table_ == b.table_ && a.names_ == b.names_;
  }

 private:
  Element check(Element a) const {
    if (a >= table_.size())
      throw DomainError("element index " + std::to_string(a) + " out of range for group of order " +
                        std::to_string(table_.size()));
    return a;
  }

  void validate() const {
    const std::size_t m = table_.size();
    if (m == 0) throw InvalidOrder("group order must be positive");
    if (names_.size() != m)
      throw ValidationError("shape", "names list has " + std::to_string(names_.size()) +
                                         " entries, expected " + std::to_string(m));
    for (std::size_t a = 0; a < m; ++a) {
      if (table_[a].size() != m)
        throw ValidationError("shape", "table row " + std::to_string(a) + " has wrong length");
      for (Element v : table_[a])
        if (v >= m)
          throw ValidationError("closure", "table entry " + std::to_string(v) + " out of range");
    }
    for (Element a = 0; a < m; ++a)
      if (table_[0][a] != a || table_[a][0] != a)
        throw ValidationError("identity", "element 0 is not a two-sided identity for element " +
                                              std::to_string(a));
    for (Element a = 0; a < m; ++a) {
      std::size_t count = 0;
      for (Element b = 0; b < m; ++b)
        if (table_[a][b] == 0 && table_[b][a] == 0) ++count;
      if (count != 1)
        throw ValidationError("inverse", "element " + std::to_string(a) +
                                             " has no unique two-sided inverse");
    }
    if (m <= kAssociativityCheckLimit) {
      for (Element a = 0; a < m; ++a)
        for (Element b = 0; b < m; ++b) {
          const Element ab = table_[a][b];
          for (Element c = 0; c < m; ++c)
            if (table_[ab][c] != table_[a][table_[b][c]])
              throw ValidationError("associativity", "(" + std::to_string(a) + "*" +
                                                         std::to_string(b) + ")*" +
                                                         std::to_string(c) + " differs");
        }
    }
  }

  std::vector<std::vector<Element>> table_;
  std::vector<std::string> names_;
  std::string label_;
  std::vector<Element> inverse_;
};

inline std::string power_name(const std::string& base, std::size_t k) {
  if (k == 0) return "1";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

// C_n with element k <-> x^k.
inline FiniteGroup make_cyclic(std::size_t n) {
  if (n == 0) throw InvalidOrder("cyclic group order must be >= 1");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = power_name("x", a);
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Element>((a + b) % n);
  }
  return FiniteGroup(std::move(t), std::move(names), "C" + std::to_string(n));
}

// D_n of order 2n: index k < n is r^k, index n + k is s r^k, with r s = s r^-1.
inline FiniteGroup make_dihedral(std::size_t n) {
  if (n == 0) throw InvalidOrder("dihedral parameter must be >= 1");
  const std::size_t m = 2 * n;
  auto decode = [n](std::size_t e) { return std::pair{e / n, e % n}; };
  std::vector<std::vector<Element>> t(m, std::vector<Element>(m));
  std::vector<std::string> names(m);
  for (std::size_t a = 0; a < m; ++a) {
    auto [sa, ra] = decode(a);
    if (sa == 0)
      names[a] = power_name("r", ra);
    else
      names[a] = ra == 0 ? "s" : "s" + power_name("r", ra);
    for (std::size_t b = 0; b < m; ++b) {
      auto [sb, rb] = decode(b);
      // s^sa r^ra s^sb r^rb = s^(sa+sb) r^((-1)^sb ra + rb)
      std::size_t r = sb == 0 ? (ra + rb) % n : (n - ra + rb) % n;
      t[a][b] = static_cast<Element>(((sa + sb) % 2) * n + r);
    }
  }
  return FiniteGroup(std::move(t), std::move(names), "D" + std::to_string(n));
}

using Permutation = std::vector<int>;  // one-line notation, 0-based images

// Cycle notation with 1-based points; cycles start at their least point.
inline std::string cycle_notation(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == static_cast<int>(start)) continue;
    out += '(';
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(p[x])) {
      seen[x] = true;
      out += std::to_string(x + 1);
    }
    out += ')';
  }
  return out.empty() ? "1" : out;
}

inline constexpr std::size_t kMaxSymmetricDegree = 8;

// S_k with permutations in lexicographic one-line order and composition
// applying the right factor first: (p*q)(x) = p(q(x)). `element_order`, when
// given, relabels elements by cycle-notation name.
inline FiniteGroup make_symmetric(std::size_t k,
                                  const std::optional<std::vector<std::string>>& element_order = {}) {
  if (k == 0) throw InvalidOrder("symmetric group degree must be >= 1");
  if (k > kMaxSymmetricDegree)
    throw SizeLimitError("symmetric group degree " + std::to_string(k) + " exceeds limit " +
                         std::to_string(kMaxSymmetricDegree));
  std::vector<Permutation> perms;
  Permutation p(k);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::map<Permutation, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<Element>(i);

  const std::size_t m = perms.size();
  std::vector<std::vector<Element>> t(m, std::vector<Element>(m));
  std::vector<std::string> names(m);
  Permutation prod(k);
  for (std::size_t a = 0; a < m; ++a) {
    names[a] = cycle_notation(perms[a]);
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t x = 0; x < k; ++x)
        prod[x] = perms[a][static_cast<std::size_t>(perms[b][x])];
      t[a][b] = index.at(prod);
    }
  }
  FiniteGroup g(std::move(t), std::move(names), "S" + std::to_string(k));
  if (element_order) return g.relabeled(*element_order);
  return g;
}

// Cayley-table JSON: {"order": m, "names": [...], "table": [[...], ...]}.
inline FiniteGroup group_from_json(const nlohmann::json& j, std::string label = "table") {
  try {
    auto order = j.at("order").get<std::size_t>();
    auto names = j.at("names").get<std::vector<std::string>>();
    auto table = j.at("table").get<std::vector<std::vector<Element>>>();
    if (table.size() != order)
      throw ValidationError("shape", "table has " + std::to_string(table.size()) +
                                         " rows, order is " + std::to_string(order));
    return FiniteGroup(std::move(table), std::move(names), std::move(label));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("schema", e.what());
  }
}

inline nlohmann::json group_to_json(const FiniteGroup& g) {
  return {{"order", g.order()}, {"names", g.names()}, {"table", g.table()}};
}

inline FiniteGroup load_group_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open Cayley table file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("schema", std::string("malformed JSON in '") + path + "': " + e.what());
  }
  return group_from_json(j, "table:" + path);
}

// Grammar: item ("," item)*, item in { C<n>, S<n>, D<n>, table:<path> }.
// S<n> may carry a relabel list in brackets, names separated by spaces:
// S3[1 (12) (13) (23) (123) (132)].
inline std::vector<FiniteGroup> parse_group_spec(const std::string& spec) {
  std::vector<FiniteGroup> out;
  std::size_t pos = 0;
  auto parse_number = [&](std::size_t& p) {
    std::size_t start = p;
    while (p < spec.size() && std::isdigit(static_cast<unsigned char>(spec[p]))) ++p;
    if (p == start) throw ParseError("expected a number", p);
    if (p - start > 9) throw ParseError("number too large", start);
    return static_cast<std::size_t>(std::stoul(spec.substr(start, p - start)));
  };
  if (spec.empty()) throw ParseError("empty group spec", 0);
  while (true) {
    if (pos >= spec.size()) throw ParseError("expected a group item", pos);
    const char kind = spec[pos];
    if (spec.compare(pos, 6, "table:") == 0) {
      std::size_t start = pos + 6;
      std::size_t end = spec.find(',', start);
      if (end == std::string::npos) end = spec.size();
      if (end == start) throw ParseError("empty table path", start);
      out.push_back(load_group_table(spec.substr(start, end - start)));
      pos = end;
    } else if (kind == 'C' || kind == 'S' || kind == 'D') {
      std::size_t item_start = pos;
      ++pos;
      std::size_t n = parse_number(pos);
      try {
        if (kind == 'C') {
          out.push_back(make_cyclic(n));
        } else if (kind == 'D') {
          out.push_back(make_dihedral(n));
        } else {
          std::optional<std::vector<std::string>> order;
          if (pos < spec.size() && spec[pos] == '[') {
            std::size_t close = spec.find(']', pos);
            if (close == std::string::npos) throw ParseError("unterminated relabel list", pos);
            std::istringstream names(spec.substr(pos + 1, close - pos - 1));
            order.emplace();
            for (std::string name; names >> name;) order->push_back(name);
            pos = close + 1;
          }
          out.push_back(make_symmetric(n, order));
        }
      } catch (const DomainError& e) {
        throw ParseError(e.what(), item_start);
      }
    } else {
      throw ParseError(std::string("unknown group item '") + kind + "'", pos);
    }
    if (pos == spec.size()) break;
    if (spec[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  return out;
}

}  // namespace monodromy
