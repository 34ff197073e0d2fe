#pragma once

// The 2-skeleton of the polyhedral product Z_K(I,F) as a cubical complex, and
// its first homology via Smith normal form.

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "monodromy/bigint.hpp"
#include "monodromy/error.hpp"
#include "monodromy/group.hpp"
#include "monodromy/int_matrix.hpp"
#include "monodromy/limits.hpp"

namespace monodromy {

using VertexSet = std::uint64_t;  // bit v set <=> vertex v (0-based) present

// A simplicial complex on vertices 0..n-1 stored by its facets. Every
// singleton is a face (K0 is contained in K).
class SimplicialComplex {
 public:
  static constexpr std::size_t kMaxVertices = 63;

  SimplicialComplex(std::size_t vertex_count, const std::vector<VertexSet>& faces)
      : n_(vertex_count) {
    if (n_ == 0) throw DomainError("simplicial complex needs at least one vertex");
    if (n_ > kMaxVertices) throw SizeLimitError("simplicial complex limited to 63 vertices");
    std::vector<VertexSet> all = faces;
    for (std::size_t v = 0; v < n_; ++v) all.push_back(VertexSet{1} << v);
    for (VertexSet f : all)
      if (f >> n_) throw DomainError("face mentions a vertex beyond " + std::to_string(n_));
    // Keep only maximal faces.
    std::sort(all.begin(), all.end(),
              [](VertexSet a, VertexSet b) { return std::popcount(a) > std::popcount(b); });
    for (VertexSet f : all)
      if (!contains(f)) facets_.push_back(f);
    std::sort(facets_.begin(), facets_.end());
  }

  static SimplicialComplex discrete(std::size_t n) { return SimplicialComplex(n, {}); }

  static SimplicialComplex simplex(std::size_t n) {
    return SimplicialComplex(n, {n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1});
  }

  std::size_t vertex_count() const noexcept { return n_; }
  const std::vector<VertexSet>& facets() const noexcept { return facets_; }

  bool contains(VertexSet face) const {
    if (face == 0) return true;
    return std::any_of(facets_.begin(), facets_.end(),
                       [face](VertexSet f) { return (f & face) == face; });
  }

  bool edge(std::size_t a, std::size_t b) const {
    return contains((VertexSet{1} << a) | (VertexSet{1} << b));
  }

  // Every clique of the 1-skeleton is a face.
  bool is_flag() const {
    std::vector<VertexSet> adj(n_, 0);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        if (a != b && edge(a, b)) adj[a] |= VertexSet{1} << b;
    // Extend cliques by higher-numbered vertices only; a non-face clique
    // settles the question.
    std::vector<std::pair<VertexSet, VertexSet>> stack;  // (clique, candidates)
    for (std::size_t v = 0; v < n_; ++v)
      stack.push_back({VertexSet{1} << v, adj[v] & ~((VertexSet{2} << v) - 1)});
    while (!stack.empty()) {
      auto [clique, candidates] = stack.back();
      stack.pop_back();
      if (!contains(clique)) return false;
      while (candidates) {
        const int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        stack.push_back({clique | (VertexSet{1} << v), candidates & adj[v]});
      }
    }
    return true;
  }

  bool subset_of(const SimplicialComplex& other) const {
    return n_ == other.n_ && std::all_of(facets_.begin(), facets_.end(),
                                         [&](VertexSet f) { return other.contains(f); });
  }

  std::string to_string() const {
    std::string out = "K={";
    for (std::size_t k = 0; k < facets_.size(); ++k) {
      if (k) out += ';';
      bool first = true;
      for (std::size_t v = 0; v < n_; ++v)
        if (facets_[k] >> v & 1) {
          if (!first) out += ',';
          out += std::to_string(v + 1);
          first = false;
        }
    }
    return out + "}";
  }

 private:
  std::size_t n_;
  std::vector<VertexSet> facets_;
};

namespace detail {

inline VertexSet parse_facet(const std::string& text, std::size_t n, std::size_t offset) {
  VertexSet f = 0;
  std::size_t pos = 0;
  bool any = false;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++pos;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(std::string("unexpected character '") + c + "' in facet", offset + pos);
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos - start > 4) throw ParseError("vertex number too large", offset + start);
    const std::size_t v = std::stoul(text.substr(start, pos - start));
    if (v < 1 || v > n)
      throw ParseError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n),
                       offset + start);
    f |= VertexSet{1} << (v - 1);
    any = true;
  }
  if (!any) throw ParseError("empty facet", offset);
  return f;
}

}  // namespace detail

// `K={1;2;3;1,2}` (facets separated by ';', vertices by ','), `K0` for the
// discrete complex, `full` for the simplex, or `@<path>` for a file with one
// facet per line. Vertices are 1-based.
inline SimplicialComplex parse_complex(const std::string& spec, std::size_t n) {
  if (n > SimplicialComplex::kMaxVertices) throw SizeLimitError("too many vertices");
  if (spec == "K0") return SimplicialComplex::discrete(n);
  if (spec == "full") return SimplicialComplex::simplex(n);
  std::vector<VertexSet> faces;
  if (!spec.empty() && spec[0] == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) throw DomainError("cannot open complex file '" + spec.substr(1) + "'");
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }))
        continue;
      faces.push_back(detail::parse_facet(line, n, lineno));
    }
    return SimplicialComplex(n, faces);
  }
  const std::string prefix = "K={";
  if (spec.compare(0, prefix.size(), prefix) != 0) throw ParseError("expected 'K={'", 0);
  if (spec.back() != '}') throw ParseError("expected closing '}'", spec.size());
  const std::string body = spec.substr(prefix.size(), spec.size() - prefix.size() - 1);
  std::size_t start = 0;
  while (start <= body.size() && !body.empty()) {
    std::size_t end = body.find(';', start);
    if (end == std::string::npos) end = body.size();
    faces.push_back(detail::parse_facet(body.substr(start, end - start), n, prefix.size() + start));
    start = end + 1;
  }
  return SimplicialComplex(n, faces);
}

// Cells of dimension <= 2 of Z_K(I,F). Coordinate i is subdivided at
// positions 0..m_i-1; an edge is an interval [k,k+1] in one coordinate, a
// square a product of intervals in two coordinates forming an edge of K.
class CubicalComplex {
 public:
  struct Edge {
    std::size_t coord;
    std::size_t low;  // vertex at the interval's lower end
  };
  struct Square {
    std::size_t coord_a;  // coord_a < coord_b
    std::size_t coord_b;
    std::size_t corner;  // vertex at the lower corner
  };

  CubicalComplex(const std::vector<std::size_t>& orders, const SimplicialComplex& k,
                 std::optional<std::size_t> cap = {})
      : orders_(orders) {
    const std::size_t n = orders_.size();
    if (k.vertex_count() != n)
      throw DomainError("complex has " + std::to_string(k.vertex_count()) + " vertices but " +
                        std::to_string(n) + " groups were given");
    const std::size_t limit = cap.value_or(cell_cap());
    strides_.assign(n, 1);
    BigInt total = 1;
    for (std::size_t i = n; i-- > 0;) {
      if (orders_[i] == 0) throw InvalidOrder("group orders must be >= 1");
      strides_[i] = static_cast<std::size_t>(total);
      total *= orders_[i];
      if (total > limit) throw SizeLimitError("cubical complex exceeds cell cap " + std::to_string(limit));
    }
    vertex_count_ = static_cast<std::size_t>(total);

    edge_index_.assign(n, std::vector<std::size_t>(vertex_count_, kNone));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t v = 0; v < vertex_count_; ++v) {
        if (coordinate(v, i) != 0) continue;
        for (std::size_t p = 0; p + 1 < orders_[i]; ++p) {
          edge_index_[i][v + p * strides_[i]] = edges_.size();
          edges_.push_back({i, v + p * strides_[i]});
        }
      }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!k.edge(a, b)) continue;
        for (std::size_t v = 0; v < vertex_count_; ++v)
          if (coordinate(v, a) + 1 < orders_[a] && coordinate(v, b) + 1 < orders_[b])
            squares_.push_back({a, b, v});
      }
    if (vertex_count_ + edges_.size() + squares_.size() > limit)
      throw SizeLimitError("cubical complex exceeds cell cap " + std::to_string(limit));
  }

  CubicalComplex(const std::vector<FiniteGroup>& groups, const SimplicialComplex& k,
                 std::optional<std::size_t> cap = {})
      : CubicalComplex(orders_of(groups), k, cap) {}

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t square_count() const noexcept { return squares_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Square>& squares() const noexcept { return squares_; }

  std::size_t coordinate(std::size_t v, std::size_t i) const { return (v / strides_[i]) % orders_[i]; }

  // d(edge) = high - low
  IntMatrix boundary1() const {
    IntMatrix d(vertex_count_, edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      d(edges_[e].low + strides_[edges_[e].coord], e) += 1;
      d(edges_[e].low, e) -= 1;
    }
    return d;
  }

  // d(I_a x I_b) = dI_a x I_b - I_a x dI_b
  IntMatrix boundary2() const {
    IntMatrix d(edges_.size(), squares_.size());
    for (std::size_t s = 0; s < squares_.size(); ++s) {
      const auto& q = squares_[s];
      const std::size_t sa = strides_[q.coord_a], sb = strides_[q.coord_b];
      d(edge_index_[q.coord_b][q.corner + sa], s) += 1;
      d(edge_index_[q.coord_b][q.corner], s) -= 1;
      d(edge_index_[q.coord_a][q.corner + sb], s) -= 1;
      d(edge_index_[q.coord_a][q.corner], s) += 1;
    }
    return d;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  static std::vector<std::size_t> orders_of(const std::vector<FiniteGroup>& groups) {
    std::vector<std::size_t> out;
    for (const auto& g : groups) out.push_back(g.order());
    return out;
  }

  std::vector<std::size_t> orders_;
  std::vector<std::size_t> strides_;
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> edge_index_;
  std::vector<Square> squares_;
};

struct HomologyOne {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1

  friend bool operator==(const HomologyOne&, const HomologyOne&) = default;
};

inline HomologyOne h1(const CubicalComplex& cx) {
  const SmithForm d1 = smith_normal_form(cx.boundary1());
  HomologyOne out;
  const std::size_t cycles = cx.edge_count() - d1.rank;
  std::size_t boundary_rank = 0;
  if (cx.square_count() > 0) {
    const SmithForm d2 = smith_normal_form(cx.boundary2());
    boundary_rank = d2.rank;
    for (const BigInt& f : d2.invariant_factors)
      if (f > 1) out.torsion.push_back(f);
  }
  out.betti = cycles - boundary_rank;
  return out;
}

}  // namespace monodromy
