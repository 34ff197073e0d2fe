#include <map>
#include <random>

#include <gtest/gtest.h>

#include "monodromy/commutator_calculus.hpp"

using namespace monodromy;

namespace {

// Truncated noncommutative polynomials as an ordered map, multiplied term by
// term.
using Poly = std::map<std::vector<std::size_t>, long long>;

Poly poly_mul(const Poly& a, const Poly& b, std::size_t degree) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      if (ma.size() + mb.size() > degree) continue;
      auto m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out[m] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Poly letter_poly(FreeLetter l, std::size_t degree) {
  const std::size_t s = free_symbol(l);
  Poly p{{{}, 1}};
  std::vector<std::size_t> m;
  for (std::size_t k = 1; k <= degree; ++k) {
    m.push_back(s);
    if (l > 0 && k > 1) break;
    p[m] = (l < 0 && k % 2) ? -1 : 1;
  }
  return p;
}

Poly naive_magnus(const FreeWord& w, std::size_t degree) {
  Poly acc{{{}, 1}};
  for (FreeLetter l : w) acc = poly_mul(acc, letter_poly(l, degree), degree);
  return acc;
}

FreeWord random_free(std::mt19937_64& rng, std::size_t symbols, std::size_t len) {
  FreeWord w;
  std::uniform_int_distribution<int> d(0, static_cast<int>(symbols) - 1);
  for (std::size_t k = 0; k < len; ++k) w.push_back(free_letter(static_cast<std::size_t>(d(rng)), rng() % 2 ? 1 : -1));
  return w;
}

FreeWord x(std::size_t s) { return {free_letter(s)}; }

}  // namespace

TEST(IteratedCommutator, Nesting) {
  EXPECT_EQ(iterated_commutator({x(0)}), x(0));
  EXPECT_EQ(iterated_commutator({x(0), x(1)}), (FreeWord{1, 2, -1, -2}));
  EXPECT_EQ(iterated_commutator({x(0), x(1), x(2)}), free_commutator(x(0), free_commutator(x(1), x(2))));
  EXPECT_TRUE(iterated_commutator({x(0), x(0)}).empty());
  EXPECT_THROW(iterated_commutator({}), DomainError);
}

TEST(Identities, HoldOnRandomInputs) {
  std::mt19937_64 rng(83);
  const FreeProduct p({make_symmetric(3), make_cyclic(4)});
  for (int t = 0; t < 500; ++t) {
    EXPECT_TRUE(delta_identity_check(p, p.random_word(rng, 6), p.random_word(rng, 6)));
    EXPECT_TRUE(product_expansion_check(random_free(rng, 3, 5), random_free(rng, 3, 5), random_free(rng, 3, 5)));
  }
}

TEST(Magnus, SmallExpansions) {
  MagnusSeries s(FreeWord{-1}, 4);
  EXPECT_EQ(s.coefficient({}), 1);
  EXPECT_EQ(s.coefficient({0}), -1);
  EXPECT_EQ(s.coefficient({0, 0}), 1);
  EXPECT_EQ(s.coefficient({0, 0, 0, 0}), 1);
  EXPECT_EQ(s.coefficient({1}), 0);
  MagnusSeries c(free_commutator(x(0), x(1)), 3);
  EXPECT_EQ(c.coefficient({0}), 0);
  EXPECT_EQ(c.coefficient({0, 1}), 1);
  EXPECT_EQ(c.coefficient({1, 0}), -1);
  EXPECT_EQ(c.lowest_degree(), 2);
  EXPECT_THROW(MagnusSeries(x(0), 0), DomainError);
  EXPECT_THROW(MagnusSeries(x(0), kMaxMagnusDegree + 1), DomainError);
}

TEST(Magnus, MatchesNaivePolynomialProduct) {
  std::mt19937_64 rng(89);
  for (int t = 0; t < 150; ++t) {
    const std::size_t degree = 1 + t % 5;
    FreeWord w = random_free(rng, 3, 1 + t % 9);
    MagnusSeries s(w, static_cast<int>(degree));
    Poly oracle = naive_magnus(w, degree);
    // Every monomial over {0,1,2} up to the degree.
    std::vector<std::vector<std::size_t>> monos{{}};
    for (std::size_t d = 0; d < degree; ++d) {
      std::vector<std::vector<std::size_t>> next;
      for (const auto& m : monos)
        if (m.size() == d)
          for (std::size_t v = 0; v < 3; ++v) {
            auto n = m;
            n.push_back(v);
            next.push_back(n);
          }
      monos.insert(monos.end(), next.begin(), next.end());
    }
    for (const auto& m : monos) {
      auto it = oracle.find(m);
      EXPECT_EQ(s.coefficient(m), it == oracle.end() ? 0 : it->second);
    }
  }
}

TEST(Magnus, WordTimesInverseIsOne) {
  std::mt19937_64 rng(97);
  for (int t = 0; t < 50; ++t) {
    FreeWord w = random_free(rng, 2, 6);
    FreeWord both = w;
    for (FreeLetter l : free_inverse(w)) both.push_back(l);  // unreduced on purpose
    MagnusSeries s(both, 5);
    EXPECT_FALSE(s.lowest_degree().has_value());
  }
}

TEST(Magnus, Weights) {
  EXPECT_EQ(magnus_weight(x(0), 5).weight, 1);
  EXPECT_EQ(magnus_weight(free_commutator(x(0), x(1)), 5).weight, 2);
  EXPECT_EQ(magnus_weight(iterated_commutator({x(0), x(1), x(2)}), 5).weight, 3);
  EXPECT_EQ(magnus_weight(iterated_commutator({x(0), x(1), x(0), x(1)}), 6).weight, 4);
  FreeWord c4 = free_commutator(free_commutator(x(0), x(1)), free_commutator(x(2), x(3)));
  EXPECT_EQ(magnus_weight(c4, 6).weight, 4);
  MagnusWeight none = magnus_weight(FreeWord{1, -1}, 8);
  EXPECT_FALSE(none.weight);
  EXPECT_EQ(none.to_string(), ">= 9");
  EXPECT_EQ(magnus_weight(c4, 3).to_string(), ">= 4");
  EXPECT_EQ(magnus_weight(c4, 6).to_string(), "4");
  // Squares of commutators stay in weight 2.
  EXPECT_EQ(magnus_weight(free_multiply(free_commutator(x(0), x(1)), free_commutator(x(0), x(1))), 4).weight, 2);
}

TEST(Magnus, OverflowIsReported) {
  FreeWord big(2'000'000, free_letter(0));
  EXPECT_THROW(MagnusSeries(big, 8), DomainError);
}

TEST(FreeSpelling, InverseLettersShareSymbols) {
  const FreeProduct p({make_cyclic(2), make_cyclic(3)});
  Word c = p.commutator(p.letter(0, 1), p.letter(1, 1));
  EXPECT_EQ(free_spelling(p, c), (FreeWord{1, 2, 1, -2}));
  const FreeProduct q({make_cyclic(3), make_cyclic(3)});
  Word d = q.commutator(q.letter(0, 1), q.letter(1, 2));
  EXPECT_EQ(free_spelling(q, d), (FreeWord{1, 2, -1, -2}));
  EXPECT_EQ(magnus_weight(free_spelling(q, d), 4).weight, 2);
}
