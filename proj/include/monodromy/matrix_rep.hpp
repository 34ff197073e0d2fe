#pragma once

// Abelianization Aut(F_N) -> GL_N(Z) and the matrix-level checks on the
// two-factor monodromy representation.

#include <cstddef>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "monodromy/error.hpp"
#include "monodromy/int_matrix.hpp"
#include "monodromy/action.hpp"

namespace monodromy {

inline constexpr const char* kMatrixConvention = "columns-as-images";

// Column j holds the signed letter counts of the image of generator j, so
// abelianize(compose(f, g)) == abelianize(f) * abelianize(g).
inline IntMatrix abelianize(const Automorphism& f) {
  const std::size_t n = f.rank();
  IntMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (FreeLetter l : f.images[j]) {
      const std::size_t s = free_symbol(l);
      if (s >= n) throw DomainError("automorphism image mentions a symbol outside its basis");
      m(s, j) += l > 0 ? 1 : -1;
    }
  return m;
}

// Abelianized coordinates of a kernel word in a basis.
inline std::vector<BigInt> abelian_coordinates(const Basis& basis, const Word& kernel_word) {
  std::vector<BigInt> v(basis.rank());
  for (FreeLetter l : basis.express(kernel_word)) v[free_symbol(l)] += l > 0 ? 1 : -1;
  return v;
}

// Column j = coordinates of `from`'s j-th witness in `to`. With C this
// matrix, M_to * C == C * M_from for every monodromy element.
inline IntMatrix change_of_basis(const Basis& from, const Basis& to) {
  if (from.rank() != to.rank()) throw DomainError("bases have different ranks");
  IntMatrix c(to.rank(), from.rank());
  for (std::size_t j = 0; j < from.rank(); ++j) {
    auto col = abelian_coordinates(to, from.witnesses()[j]);
    for (std::size_t i = 0; i < col.size(); ++i) c(i, j) = col[i];
  }
  return c;
}

inline nlohmann::json matrix_json(const Basis& basis, const IntMatrix& m) {
  return {{"schema", 1},
          {"basis", basis.symbols()},
          {"convention", kMatrixConvention},
          {"entries", m.entries_json()}};
}

struct CyclicPair {
  IntMatrix x1;
  IntMatrix x2;
};

// Matrices of x1 in C_r and x2 in C_m acting on the algebraic basis
// w(i,j) = [x1^i, x2^j], computed from the closed-form action.
inline CyclicPair cyclic_closed_form(std::size_t r, std::size_t m) {
  if (r < 2 || m < 2) throw DomainError("cyclic closed form needs r, m >= 2");
  auto product = std::make_shared<const FreeProduct>(std::vector{make_cyclic(r), make_cyclic(m)});
  Basis basis = Basis::algebraic(product);
  return {abelianize(act_two_groups(basis, 0, 1)), abelianize(act_two_groups(basis, 1, 1))};
}

struct ElementMatrix {
  Element g = 0;  // element of the first factor
  Element h = 0;  // element of the second factor
  IntMatrix matrix;
  BigInt determinant;
};

struct RepresentationReport {
  std::vector<std::string> group_labels;
  std::size_t rank = 0;
  std::vector<ElementMatrix> elements;  // all pairs (g,h), matrix of g*h
  bool homomorphism = true;             // M_{gg'} = M_g M_g', same for H
  bool factors_commute = true;          // M_g M_h = M_h M_g for g in G, h in H
  bool faithful = true;                 // M_{(g,h)} = I only for (1,1)
  bool all_unimodular = true;           // det = +-1
  bool all_special_linear = true;       // det = 1
  std::size_t kernel_trials = 0;
  std::size_t kernel_failures = 0;      // kernel words with non-identity matrix
  std::vector<std::string> failures;

  bool ok() const {
    return homomorphism && factors_commute && faithful && all_unimodular && kernel_failures == 0;
  }
};

inline constexpr std::size_t kReportOrderCap = 10'000;

inline RepresentationReport representation_report(const std::vector<FiniteGroup>& groups,
                                                  std::size_t kernel_trials = 50,
                                                  std::uint64_t seed = 1) {
  if (groups.size() != 2) throw UnsupportedArity("representation report needs exactly two groups");
  if (groups[0].order() * groups[1].order() > kReportOrderCap)
    throw SizeLimitError("representation report is limited to |G||H| <= " +
                         std::to_string(kReportOrderCap));
  auto product = std::make_shared<const FreeProduct>(groups);
  Basis basis = Basis::algebraic(product);
  const FiniteGroup& G = groups[0];
  const FiniteGroup& H = groups[1];

  RepresentationReport rep;
  rep.group_labels = {G.label(), H.label()};
  rep.rank = basis.rank();
  std::vector<IntMatrix> mg, mh;
  for (Element g = 0; g < G.order(); ++g) mg.push_back(abelianize(act_two_groups(basis, 0, g)));
  for (Element h = 0; h < H.order(); ++h) mh.push_back(abelianize(act_two_groups(basis, 1, h)));

  for (Element a = 0; a < G.order(); ++a)
    for (Element b = 0; b < G.order(); ++b)
      if (mg[G.op(a, b)] != mg[a] * mg[b]) {
        rep.homomorphism = false;
        rep.failures.push_back("M(" + G.name(a) + "*" + G.name(b) + ") != M(" + G.name(a) + ")M(" +
                               G.name(b) + ")");
      }
  for (Element a = 0; a < H.order(); ++a)
    for (Element b = 0; b < H.order(); ++b)
      if (mh[H.op(a, b)] != mh[a] * mh[b]) {
        rep.homomorphism = false;
        rep.failures.push_back("M(" + H.name(a) + "*" + H.name(b) + ") != M(" + H.name(a) + ")M(" +
                               H.name(b) + ")");
      }

  for (Element g = 0; g < G.order(); ++g)
    for (Element h = 0; h < H.order(); ++h) {
      IntMatrix m = mg[g] * mh[h];
      if (m != mh[h] * mg[g]) {
        rep.factors_commute = false;
        rep.failures.push_back("M(" + G.name(g) + ") and M(" + H.name(h) + ") do not commute");
      }
      const bool trivial = m.is_identity();
      if (trivial != (g == 0 && h == 0)) {
        rep.faithful = false;
        rep.failures.push_back("M(" + G.name(g) + "," + H.name(h) + ") is " +
                               (trivial ? "" : "not ") + "the identity");
      }
      BigInt d = det(m);
      if (d != 1 && d != -1) rep.all_unimodular = false;
      if (d != 1) rep.all_special_linear = false;
      rep.elements.push_back({g, h, std::move(m), d});
    }

  std::mt19937_64 rng(seed);
  rep.kernel_trials = kernel_trials;
  for (std::size_t t = 0; t < kernel_trials; ++t) {
    Word w = product->random_kernel_word(rng, 12);
    if (!abelianize(act_word(basis, w)).is_identity()) {
      ++rep.kernel_failures;
      rep.failures.push_back("kernel word " + product->format(w) + " acts non-trivially on H1");
    }
  }
  return rep;
}

inline nlohmann::json report_json(const RepresentationReport& rep) {
  nlohmann::json elements = nlohmann::json::array();
  for (const auto& e : rep.elements)
    elements.push_back({{"g", e.g}, {"h", e.h}, {"det", e.determinant.str()},
                        {"identity", e.matrix.is_identity()}});
  return {{"schema", 1},
          {"groups", rep.group_labels},
          {"rank", rep.rank},
          {"convention", kMatrixConvention},
          {"homomorphism", rep.homomorphism},
          {"factors_commute", rep.factors_commute},
          {"faithful", rep.faithful},
          {"all_unimodular", rep.all_unimodular},
          {"all_special_linear", rep.all_special_linear},
          {"kernel_trials", rep.kernel_trials},
          {"kernel_failures", rep.kernel_failures},
          {"elements", elements},
          {"failures", rep.failures},
          {"ok", rep.ok()}};
}

}  // namespace monodromy
