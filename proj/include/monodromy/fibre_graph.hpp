#pragma once

// The grid graph Z_{K0}(I,F): one vertex per tuple in G_1 x ... x G_n, with
// each coordinate's elements laid out on a line in element-index order and
// consecutive positions joined by unit edges. Its fundamental group is the
// kernel of G_1 * ... * G_n -> G_1 x ... x G_n, and a BFS spanning tree gives
// a free basis (one generator per non-tree edge).

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "monodromy/bigint.hpp"
#include "monodromy/error.hpp"
#include "monodromy/free_word.hpp"
#include "monodromy/limits.hpp"
#include "monodromy/word.hpp"

namespace monodromy {

// N_n = (n-1) prod m_i - sum_i prod_{j != i} m_j + 1
inline BigInt rank_formula(const std::vector<std::size_t>& orders) {
  if (orders.empty()) throw DomainError("rank formula needs at least one order");
  BigInt product = 1;
  for (auto m : orders) {
    if (m == 0) throw InvalidOrder("group orders must be >= 1");
    product *= m;
  }
  BigInt sum = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    BigInt p = 1;
    for (std::size_t j = 0; j < orders.size(); ++j)
      if (j != i) p *= orders[j];
    sum += p;
  }
  return BigInt(orders.size() - 1) * product - sum + 1;
}

struct GraphEdge {
  std::size_t coord = 0;
  std::size_t low = 0;   // vertex at position k
  std::size_t high = 0;  // vertex at position k+1
  Element position = 0;  // k
};

struct PathStep {
  std::size_t edge = 0;
  bool forward = true;  // low -> high

  friend bool operator==(const PathStep&, const PathStep&) = default;
};

struct EdgePath {
  std::size_t start = 0;
  std::size_t end = 0;
  std::vector<PathStep> steps;

  bool closed() const noexcept { return start == end; }
};

class FibreGraph {
 public:
  explicit FibreGraph(FreeProduct product, std::optional<std::size_t> vertex_cap = {})
      : product_(std::move(product)) {
    const std::size_t n = product_.arity();
    const std::size_t cap = vertex_cap.value_or(cell_cap());
    orders_ = product_.orders();
    strides_.assign(n, 1);
    BigInt total = 1;
    for (std::size_t i = n; i-- > 0;) {
      strides_[i] = static_cast<std::size_t>(total);
      total *= orders_[i];
      if (total > cap)
        throw SizeLimitError("fibre graph would have " + total.str() + "+ vertices, cap is " +
                             std::to_string(cap));
    }
    vertex_count_ = static_cast<std::size_t>(total);
    build_edges();
    build_tree();
  }

  explicit FibreGraph(std::vector<FiniteGroup> groups, std::optional<std::size_t> vertex_cap = {})
      : FibreGraph(FreeProduct(std::move(groups)), vertex_cap) {}

  const FreeProduct& product() const noexcept { return product_; }
  std::size_t arity() const noexcept { return orders_.size(); }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<GraphEdge>& edges() const noexcept { return edges_; }
  static constexpr std::size_t basepoint() noexcept { return 0; }

  bool is_tree_edge(std::size_t e) const { return in_tree_.at(e); }
  const std::vector<std::size_t>& cotree() const noexcept { return cotree_; }
  std::optional<std::size_t> cotree_index(std::size_t edge) const {
    auto c = cotree_index_.at(edge);
    if (c < 0) return std::nullopt;
    return static_cast<std::size_t>(c);
  }

  std::size_t vertex(const ElementTuple& t) const {
    if (t.size() != arity()) throw DomainError("tuple arity mismatch");
    std::size_t v = 0;
    for (std::size_t i = 0; i < arity(); ++i) {
      if (t[i] >= orders_[i]) throw DomainError("tuple entry out of range");
      v += t[i] * strides_[i];
    }
    return v;
  }

  ElementTuple tuple(std::size_t v) const {
    ElementTuple t(arity());
    for (std::size_t i = 0; i < arity(); ++i) t[i] = coordinate(v, i);
    return t;
  }

  Element coordinate(std::size_t v, std::size_t i) const {
    return static_cast<Element>((v / strides_[i]) % orders_[i]);
  }

  // Id of the edge along coordinate i whose lower endpoint is `low`.
  std::size_t edge_id(std::size_t coord, std::size_t low) const {
    const std::size_t k = coordinate(low, coord);
    if (k + 1 >= orders_[coord]) throw DomainError("no edge above the last position");
    const std::size_t base = (low / (strides_[coord] * orders_[coord])) * strides_[coord] +
                             low % strides_[coord];
    return coord_offset_[coord] + base * (orders_[coord] - 1) + k;
  }

  // Edge count; connectivity was established during construction.
  std::size_t betti_one() const {
    if (!connected_) throw InvariantViolation("fibre graph is disconnected");
    return edge_count() - vertex_count() + 1;
  }

  // The path tracked by a word from the basepoint: letter (i,h) moves the
  // i-th coordinate from e to e*h through the intermediate positions.
  EdgePath word_to_path(const Word& w) const {
    EdgePath path;
    path.start = path.end = basepoint();
    for (const Letter& l : w.letters) {
      const FiniteGroup& g = product_.group(l.factor);
      Element from = coordinate(path.end, l.factor);
      Element to = g.op(from, l.elem);
      move_along(path, l.factor, to);
    }
    return path;
  }

  // Walks the path and records each traversal of a cotree edge as the
  // corresponding basis symbol (inverse when traversed backwards).
  FreeWord loop_to_basis(const EdgePath& loop) const {
    if (loop.start != basepoint()) throw DomainError("loop does not start at the basepoint");
    FreeWord out;
    std::size_t at = loop.start;
    for (const PathStep& s : loop.steps) {
      const GraphEdge& e = edges_.at(s.edge);
      const std::size_t from = s.forward ? e.low : e.high;
      if (from != at) throw DomainError("edge path is not contiguous");
      at = s.forward ? e.high : e.low;
      if (cotree_index_[s.edge] >= 0)
        free_push(out, free_letter(static_cast<std::size_t>(cotree_index_[s.edge]), s.forward ? 1 : -1));
    }
    if (at != loop.end) throw DomainError("edge path end does not match its steps");
    if (!loop.closed()) throw DomainError("path is not closed at the basepoint");
    return out;
  }

  FreeWord express(const Word& kernel_word) const {
    return loop_to_basis(word_to_path(kernel_word));
  }

  EdgePath tree_path_from_base(std::size_t v) const {
    EdgePath p;
    p.start = basepoint();
    p.end = v;
    for (std::size_t at = v; at != basepoint();) {
      const std::size_t e = parent_edge_[at];
      const GraphEdge& ge = edges_[e];
      const bool forward = ge.high == at;
      p.steps.push_back({e, forward});
      at = forward ? ge.low : ge.high;
    }
    std::reverse(p.steps.begin(), p.steps.end());
    return p;
  }

  EdgePath fundamental_cycle(std::size_t cotree_symbol) const {
    const GraphEdge& e = edges_.at(cotree_.at(cotree_symbol));
    EdgePath p = tree_path_from_base(e.low);
    p.steps.push_back({cotree_[cotree_symbol], true});
    EdgePath back = tree_path_from_base(e.high);
    for (auto it = back.steps.rbegin(); it != back.steps.rend(); ++it)
      p.steps.push_back({it->edge, !it->forward});
    p.end = basepoint();
    return p;
  }

  // One letter per edge step, then reduced.
  Word path_to_word(const EdgePath& path) const {
    std::vector<Letter> raw;
    for (const PathStep& s : path.steps) {
      const GraphEdge& e = edges_.at(s.edge);
      const FiniteGroup& g = product_.group(e.coord);
      const Element a = s.forward ? e.position : e.position + 1;
      const Element b = s.forward ? e.position + 1 : e.position;
      raw.push_back({e.coord, g.op(g.inverse(a), b)});
    }
    return product_.reduce(raw);
  }

  Word cotree_witness(std::size_t cotree_symbol) const {
    return path_to_word(fundamental_cycle(cotree_symbol));
  }

  std::string vertex_label(std::size_t v) const {
    std::string s = "(";
    for (std::size_t i = 0; i < arity(); ++i) {
      if (i) s += ',';
      s += product_.group(i).name(coordinate(v, i));
    }
    return s + ")";
  }

  std::string cotree_symbol_name(std::size_t c) const { return "e" + std::to_string(c + 1); }

  // Tree edges solid, cotree edges dashed; edges of `overlay` drawn red.
  std::string to_dot(const std::optional<EdgePath>& overlay = {}) const {
    std::vector<bool> highlighted(edges_.size(), false);
    if (overlay)
      for (const PathStep& s : overlay->steps) highlighted.at(s.edge) = true;
    std::ostringstream out;
    out << "graph fibre {\n";
    for (std::size_t v = 0; v < vertex_count_; ++v)
      out << "  v" << v << " [label=\"" << vertex_label(v) << "\""
          << (v == basepoint() ? ", shape=doublecircle" : "") << "];\n";
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      out << "  v" << edges_[e].low << " -- v" << edges_[e].high << " [";
      if (in_tree_[e])
        out << "style=solid";
      else
        out << "style=dashed, label=\"" << cotree_symbol_name(static_cast<std::size_t>(cotree_index_[e]))
            << "\"";
      if (highlighted[e]) out << ", color=red, penwidth=2";
      out << "];\n";
    }
    out << "}\n";
    return out.str();
  }

 private:
  void build_edges() {
    coord_offset_.assign(arity(), 0);
    for (std::size_t i = 0; i < arity(); ++i) {
      coord_offset_[i] = edges_.size();
      if (orders_[i] < 2) continue;
      for (std::size_t v = 0; v < vertex_count_; ++v) {
        if (coordinate(v, i) != 0) continue;
        for (std::size_t k = 0; k + 1 < orders_[i]; ++k) {
          const std::size_t low = v + k * strides_[i];
          edges_.push_back({i, low, low + strides_[i], static_cast<Element>(k)});
        }
      }
    }
  }

  void build_tree() {
    in_tree_.assign(edges_.size(), false);
    parent_edge_.assign(vertex_count_, edges_.size());
    std::vector<bool> seen(vertex_count_, false);
    std::deque<std::size_t> queue{basepoint()};
    seen[basepoint()] = true;
    std::size_t visited = 1;
    auto visit = [&](std::size_t e, std::size_t to) {
      if (seen[to]) return;
      seen[to] = true;
      ++visited;
      in_tree_[e] = true;
      parent_edge_[to] = e;
      queue.push_back(to);
    };
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < arity(); ++i) {
        const std::size_t p = coordinate(v, i);
        if (p > 0) visit(edge_id(i, v - strides_[i]), v - strides_[i]);
        if (p + 1 < orders_[i]) visit(edge_id(i, v), v + strides_[i]);
      }
    }
    connected_ = visited == vertex_count_;
    cotree_index_.assign(edges_.size(), -1);
    for (std::size_t e = 0; e < edges_.size(); ++e)
      if (!in_tree_[e]) {
        cotree_index_[e] = static_cast<long>(cotree_.size());
        cotree_.push_back(e);
      }
  }

  void move_along(EdgePath& path, std::size_t coord, Element to) const {
    Element at = coordinate(path.end, coord);
    while (at < to) {
      path.steps.push_back({edge_id(coord, path.end), true});
      path.end += strides_[coord];
      ++at;
    }
    while (at > to) {
      path.end -= strides_[coord];
      path.steps.push_back({edge_id(coord, path.end), false});
      --at;
    }
  }

  FreeProduct product_;
  std::vector<std::size_t> orders_;
  std::vector<std::size_t> strides_;
  std::size_t vertex_count_ = 0;
  std::vector<GraphEdge> edges_;
  std::vector<std::size_t> coord_offset_;
  std::vector<bool> in_tree_;
  std::vector<std::size_t> parent_edge_;
  std::vector<std::size_t> cotree_;
  std::vector<long> cotree_index_;
  bool connected_ = false;
};

}  // namespace monodromy
