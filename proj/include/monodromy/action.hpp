#pragma once

// The monodromy action of G_1 * ... * G_n on the kernel free group F_N by
// conjugation, expressed in a free basis of F_N.
//
// Two bases are supported:
//   algebraic  n = 2 only: w(i,j) = [g_i, h_j] for non-identity g_i in G_1 and
//              h_j in G_2, ordered i-major by element index.
//   tree       any n: one generator per cotree edge of the fibre graph's BFS
//              spanning tree, in cotree order.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "monodromy/error.hpp"
#include "monodromy/fibre_graph.hpp"
#include "monodromy/free_word.hpp"
#include "monodromy/word.hpp"

namespace monodromy {

enum class BasisKind { algebraic, tree };

inline std::string to_string(BasisKind k) { return k == BasisKind::algebraic ? "algebraic" : "tree"; }

// Rewrites a kernel word of G * H as a word in the generators w(i,j) by the
// telescoping identity
//   u = [P_1,Q_1][Q_1,P_2][P_2,Q_2]...
// where P_k, Q_k are the running G- and H-products. Reading letter by letter:
// a G-letter moving P to P' contributes [Q,P'] = w(P',Q)^-1, an H-letter
// moving Q to Q' contributes [P,Q'] = w(P,Q'); factors with an identity
// argument are trivial.
inline FreeWord telescope_decompose(const FreeProduct& product, const Word& w) {
  if (product.arity() != 2)
    throw UnsupportedArity("telescoping decomposition needs exactly two factors, got " +
                           std::to_string(product.arity()));
  if (!product.is_in_kernel(w)) throw DomainError("word " + product.format(w) + " is not in the kernel");
  const FiniteGroup& g = product.group(0);
  const FiniteGroup& h = product.group(1);
  const std::size_t cols = h.order() - 1;
  auto symbol = [cols](Element p, Element q) { return (p - 1) * cols + (q - 1); };
  Element p = 0, q = 0;
  FreeWord out;
  for (const Letter& l : w.letters) {
    if (l.factor == 0) {
      p = g.op(p, l.elem);
      if (p != 0 && q != 0) free_push(out, free_letter(symbol(p, q), -1));
    } else {
      q = h.op(q, l.elem);
      if (p != 0 && q != 0) free_push(out, free_letter(symbol(p, q), 1));
    }
  }
  return out;
}

class Basis {
 public:
  static Basis algebraic(std::shared_ptr<const FreeProduct> product) {
    if (product->arity() != 2)
      throw UnsupportedArity("the algebraic basis is defined for two factors only, got " +
                             std::to_string(product->arity()));
    Basis b(BasisKind::algebraic, product);
    const std::size_t m = product->group(0).order(), n = product->group(1).order();
    for (Element i = 1; i < m; ++i)
      for (Element j = 1; j < n; ++j) {
        Word gi = product->letter(0, i), hj = product->letter(1, j);
        b.symbols_.push_back("[" + product->format_letter({0, i}) + "," +
                             product->format_letter({1, j}) + "]");
        b.witnesses_.push_back(product->commutator(gi, hj));
      }
    return b;
  }

  static Basis tree(std::shared_ptr<const FibreGraph> graph) {
    std::shared_ptr<const FreeProduct> product(graph, &graph->product());
    Basis b(BasisKind::tree, std::move(product));
    b.graph_ = std::move(graph);
    for (std::size_t c = 0; c < b.graph_->cotree().size(); ++c) {
      b.symbols_.push_back(b.graph_->cotree_symbol_name(c));
      b.witnesses_.push_back(b.graph_->cotree_witness(c));
    }
    return b;
  }

  BasisKind kind() const noexcept { return kind_; }
  std::size_t rank() const noexcept { return symbols_.size(); }
  const FreeProduct& product() const noexcept { return *product_; }
  const std::shared_ptr<const FibreGraph>& graph() const noexcept { return graph_; }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  const std::vector<Word>& witnesses() const noexcept { return witnesses_; }

  // Identifies the basis for compatibility checks between automorphisms.
  std::string tag() const {
    std::string t = to_string(kind_) + ":";
    for (std::size_t i = 0; i < product_->arity(); ++i) {
      if (i) t += ',';
      t += product_->group(i).label() + "/" + std::to_string(product_->group(i).order());
    }
    return t;
  }

  // Coordinates of a kernel element in this basis.
  FreeWord express(const Word& kernel_word) const {
    if (!product_->is_reduced(kernel_word))
      throw DomainError("word is not reduced over this basis's groups");
    if (kind_ == BasisKind::algebraic) return telescope_decompose(*product_, kernel_word);
    if (!product_->is_in_kernel(kernel_word))
      throw DomainError("word " + product_->format(kernel_word) + " is not in the kernel");
    return graph_->express(kernel_word);
  }

  // Multiplies the witnesses out: the kernel element a basis word stands for.
  Word evaluate(const FreeWord& w) const {
    Word out;
    for (FreeLetter l : w) {
      const std::size_t s = free_symbol(l);
      if (s >= rank()) throw DomainError("symbol index out of range for basis");
      out = product_->multiply(out, l > 0 ? witnesses_[s] : product_->invert(witnesses_[s]));
    }
    return out;
  }

  std::string format(const FreeWord& w) const {
    return free_word_to_string(w, [this](std::size_t s) { return symbols_.at(s); });
  }

 private:
  Basis(BasisKind kind, std::shared_ptr<const FreeProduct> product)
      : kind_(kind), product_(std::move(product)) {}

  BasisKind kind_;
  std::shared_ptr<const FreeProduct> product_;
  std::shared_ptr<const FibreGraph> graph_;
  std::vector<std::string> symbols_;
  std::vector<Word> witnesses_;
};

// An endomorphism of F_N given by the images of the basis generators.
struct Automorphism {
  std::string basis_tag;
  std::vector<FreeWord> images;

  std::size_t rank() const noexcept { return images.size(); }

  static Automorphism identity(const Basis& b) {
    Automorphism a{b.tag(), {}};
    for (std::size_t s = 0; s < b.rank(); ++s) a.images.push_back({free_letter(s)});
    return a;
  }

  FreeWord apply(const FreeWord& w) const { return free_substitute(w, images); }

  friend bool operator==(const Automorphism&, const Automorphism&) = default;
};

// (f o g)(x) = f(g(x)), so that act(uv) = compose(act(u), act(v)).
inline Automorphism compose(const Automorphism& f, const Automorphism& g) {
  if (f.basis_tag != g.basis_tag || f.rank() != g.rank())
    throw DomainError("cannot compose automorphisms over different bases (" + f.basis_tag + " vs " +
                      g.basis_tag + ")");
  Automorphism out{f.basis_tag, {}};
  out.images.reserve(g.rank());
  for (const FreeWord& img : g.images) out.images.push_back(f.apply(img));
  return out;
}

// Closed-form action of a single element t of G (factor 0) or H (factor 1)
// on the algebraic basis:
//   phi_{g_k}(w(i,j)) = w(g_k g_i, j) * w(k, j)^-1
//   phi_{h_k}(w(i,j)) = w(i, k)^-1 * w(i, h_k h_j)
// where a generator with an identity index is the empty word.
inline Automorphism act_two_groups(const Basis& basis, std::size_t factor, Element t) {
  if (basis.kind() != BasisKind::algebraic)
    throw DomainError("closed-form two-group action needs the algebraic basis");
  const FreeProduct& p = basis.product();
  const FiniteGroup& g = p.group(0);
  const FiniteGroup& h = p.group(1);
  if (factor > 1) throw DomainError("acting factor must be 1 or 2");
  if (t >= p.group(factor).order()) throw DomainError("acting element out of range");
  if (t == 0) return Automorphism::identity(basis);
  const std::size_t cols = h.order() - 1;
  auto generator = [&](Element i, Element j, int sign) -> FreeWord {
    if (i == 0 || j == 0) return {};
    return {free_letter((i - 1) * cols + (j - 1), sign)};
  };
  Automorphism a{basis.tag(), {}};
  for (Element i = 1; i < g.order(); ++i)
    for (Element j = 1; j < h.order(); ++j) {
      if (factor == 0)
        a.images.push_back(free_multiply(generator(g.op(t, i), j, 1), generator(t, j, -1)));
      else
        a.images.push_back(free_multiply(generator(i, t, -1), generator(i, h.op(t, j), 1)));
    }
  return a;
}

// phi_g(x) = coordinates of g * witness(x) * g^-1 in the basis. For the tree
// basis this is the geometric action: the conjugated word is tracked as a
// loop in the fibre graph and decomposed along the spanning tree.
inline Automorphism act_by_conjugation(const Basis& basis, const Word& g) {
  const FreeProduct& p = basis.product();
  Word gr = p.reduce(g);
  Automorphism a{basis.tag(), {}};
  a.images.reserve(basis.rank());
  for (const Word& w : basis.witnesses()) a.images.push_back(basis.express(p.conjugate(gr, w)));
  return a;
}

inline Automorphism act_geometric(const Basis& basis, const Word& g) {
  if (basis.kind() != BasisKind::tree || !basis.graph())
    throw DomainError("geometric action needs a tree basis built from a fibre graph");
  return act_by_conjugation(basis, g);
}

// Single letters go through the basis's own route (closed form for the
// algebraic basis, loop decomposition for the tree basis); words are folded
// with compose.
inline Automorphism act_letter(const Basis& basis, const Letter& l) {
  if (basis.kind() == BasisKind::algebraic) return act_two_groups(basis, l.factor, l.elem);
  return act_geometric(basis, basis.product().letter(l.factor, l.elem));
}

inline Automorphism act_word(const Basis& basis, const Word& w) {
  Automorphism a = Automorphism::identity(basis);
  for (const Letter& l : basis.product().reduce(w).letters) a = compose(a, act_letter(basis, l));
  return a;
}

inline std::string format_automorphism(const Basis& basis, const Automorphism& a) {
  std::string out;
  for (std::size_t s = 0; s < a.rank(); ++s)
    out += basis.symbols().at(s) + " -> " + basis.format(a.images[s]) + "\n";
  return out;
}

}  // namespace monodromy
