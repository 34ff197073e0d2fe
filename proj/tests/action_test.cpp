#include <random>

#include <gtest/gtest.h>

#include "monodromy/action.hpp"

using namespace monodromy;

namespace {

std::shared_ptr<const FreeProduct> product(std::vector<FiniteGroup> groups) {
  return std::make_shared<const FreeProduct>(std::move(groups));
}

FreeWord conjugate_free(const FreeWord& k, const FreeWord& x) {
  return free_multiply(free_multiply(k, x), free_inverse(k));
}

}  // namespace

TEST(Telescope, Generators) {
  auto p = product({make_cyclic(3), make_cyclic(4)});
  for (Element i = 1; i < 3; ++i)
    for (Element j = 1; j < 4; ++j) {
      Word c = p->commutator(p->letter(0, i), p->letter(1, j));
      EXPECT_EQ(telescope_decompose(*p, c), (FreeWord{free_letter((i - 1) * 3 + (j - 1))}));
    }
  EXPECT_TRUE(telescope_decompose(*p, Word{}).empty());
}

TEST(Telescope, EvaluatesBackToInput) {
  std::mt19937_64 rng(31);
  for (auto groups : {std::vector{make_cyclic(2), make_cyclic(3)}, std::vector{make_symmetric(3), make_cyclic(4)},
                      std::vector{make_dihedral(3), make_dihedral(2)}}) {
    auto p = product(groups);
    Basis b = Basis::algebraic(p);
    for (int t = 0; t < 400; ++t) {
      Word w = p->random_kernel_word(rng, 16);
      FreeWord coords = telescope_decompose(*p, w);
      EXPECT_TRUE(is_freely_reduced(coords));
      EXPECT_EQ(b.evaluate(coords), w) << p->format(w);
    }
  }
}

TEST(Telescope, Errors) {
  auto p3 = product({make_cyclic(2), make_cyclic(2), make_cyclic(2)});
  EXPECT_THROW(telescope_decompose(*p3, Word{}), UnsupportedArity);
  EXPECT_THROW(Basis::algebraic(p3), UnsupportedArity);
  auto p = product({make_cyclic(2), make_cyclic(3)});
  EXPECT_THROW(telescope_decompose(*p, p->letter(0, 1)), DomainError);
}

TEST(Basis, AlgebraicSymbols) {
  Basis b = Basis::algebraic(product({make_cyclic(2), make_cyclic(3)}));
  EXPECT_EQ(b.rank(), 2u);
  EXPECT_EQ(b.symbols(), (std::vector<std::string>{"[x1^1,x2^1]", "[x1^1,x2^2]"}));
  EXPECT_EQ(b.tag(), "algebraic:C2/2,C3/3");
}

TEST(Action, C2C3Example) {
  auto p = product({make_cyclic(2), make_cyclic(3)});
  Basis b = Basis::algebraic(p);
  // x2 acts by w11 -> w11^-1 w12, w12 -> w11^-1
  Automorphism a = act_two_groups(b, 1, 1);
  EXPECT_EQ(a.images[0], (FreeWord{free_letter(0, -1), free_letter(1)}));
  EXPECT_EQ(a.images[1], (FreeWord{free_letter(0, -1)}));
  // x1 acts by w1j -> w1j^-1
  Automorphism g = act_two_groups(b, 0, 1);
  EXPECT_EQ(g.images[0], (FreeWord{free_letter(0, -1)}));
  EXPECT_EQ(g.images[1], (FreeWord{free_letter(1, -1)}));
  EXPECT_EQ(format_automorphism(b, a), "[x1^1,x2^1] -> [x1^1,x2^1]^-1*[x1^1,x2^2]\n[x1^1,x2^2] -> [x1^1,x2^1]^-1\n");
}

TEST(Action, ClosedFormMatchesConjugation) {
  for (auto groups : {std::vector{make_cyclic(2), make_cyclic(3)}, std::vector{make_symmetric(3), make_cyclic(2)},
                      std::vector{make_cyclic(4), make_dihedral(3)}}) {
    auto p = product(groups);
    Basis b = Basis::algebraic(p);
    for (std::size_t f = 0; f < 2; ++f)
      for (Element t = 0; t < p->group(f).order(); ++t)
        EXPECT_EQ(act_two_groups(b, f, t), act_by_conjugation(b, p->letter(f, t))) << f << " " << t;
  }
}

TEST(Action, DefiningPropertyBothBases) {
  std::mt19937_64 rng(41);
  auto p = product({make_symmetric(3), make_cyclic(3)});
  auto graph = std::make_shared<const FibreGraph>(*p);
  for (const Basis& b : {Basis::algebraic(p), Basis::tree(graph)}) {
    for (int t = 0; t < 200; ++t) {
      Word g = p->random_word(rng, 6);
      Word u = p->random_kernel_word(rng, 10);
      Automorphism a = act_word(b, g);
      EXPECT_EQ(a.apply(b.express(u)), b.express(p->conjugate(g, u)));
    }
  }
}

TEST(Action, HomomorphismAndInverse) {
  std::mt19937_64 rng(43);
  auto p = product({make_cyclic(4), make_symmetric(3)});
  Basis b = Basis::algebraic(p);
  Automorphism id = Automorphism::identity(b);
  for (int t = 0; t < 200; ++t) {
    Word u = p->random_word(rng, 5), v = p->random_word(rng, 5);
    EXPECT_EQ(act_word(b, p->multiply(u, v)), compose(act_word(b, u), act_word(b, v)));
    EXPECT_EQ(compose(act_word(b, u), act_word(b, p->invert(u))), id);
  }
}

TEST(Action, LetterOrderIsRespected) {
  auto p = product({make_cyclic(4), make_symmetric(3)});
  Basis b = Basis::algebraic(p);
  Automorphism id = Automorphism::identity(b);
  for (std::size_t f = 0; f < 2; ++f)
    for (Element t = 1; t < p->group(f).order(); ++t) {
      Automorphism one = act_two_groups(b, f, t), acc = id;
      std::size_t k = 0;
      do {
        acc = compose(acc, one);
        ++k;
      } while (!(acc == id) && k < 100);
      EXPECT_EQ(k, p->group(f).element_order(t));
    }
}

TEST(Action, KernelActsByInnerAutomorphisms) {
  std::mt19937_64 rng(47);
  auto p = product({make_cyclic(3), make_cyclic(3)});
  auto graph = std::make_shared<const FibreGraph>(*p);
  for (const Basis& b : {Basis::algebraic(p), Basis::tree(graph)}) {
    for (int t = 0; t < 100; ++t) {
      Word k = p->random_kernel_word(rng, 8);
      FreeWord kc = b.express(k);
      Automorphism a = act_word(b, k);
      for (std::size_t s = 0; s < b.rank(); ++s) EXPECT_EQ(a.images[s], conjugate_free(kc, {free_letter(s)}));
    }
  }
}

TEST(Action, NonTrivialLettersActNonTrivially) {
  auto p = product({make_cyclic(3), make_symmetric(3)});
  auto graph = std::make_shared<const FibreGraph>(*p);
  for (const Basis& b : {Basis::algebraic(p), Basis::tree(graph)}) {
    Automorphism id = Automorphism::identity(b);
    for (std::size_t f = 0; f < 2; ++f)
      for (Element t = 1; t < p->group(f).order(); ++t) EXPECT_NE(act_letter(b, {f, t}), id);
  }
}

TEST(Action, TreeBasisThreeFactors) {
  std::mt19937_64 rng(53);
  auto graph = std::make_shared<const FibreGraph>(std::vector{make_cyclic(2), make_cyclic(2), make_cyclic(3)});
  Basis b = Basis::tree(graph);
  EXPECT_EQ(b.rank(), 9u);
  const FreeProduct& p = b.product();
  for (int t = 0; t < 100; ++t) {
    Word u = p.random_word(rng, 5), v = p.random_word(rng, 5);
    EXPECT_EQ(act_word(b, p.multiply(u, v)), compose(act_word(b, u), act_word(b, v)));
  }
}

TEST(Action, Errors) {
  auto p = product({make_cyclic(2), make_cyclic(3)});
  Basis alg = Basis::algebraic(p);
  Basis tree = Basis::tree(std::make_shared<const FibreGraph>(*p));
  EXPECT_THROW(compose(Automorphism::identity(alg), Automorphism::identity(tree)), DomainError);
  EXPECT_THROW(act_geometric(alg, p->letter(0, 1)), DomainError);
  EXPECT_THROW(act_two_groups(tree, 0, 1), DomainError);
  EXPECT_THROW(act_two_groups(alg, 2, 1), DomainError);
  EXPECT_THROW(act_two_groups(alg, 0, 2), DomainError);
  EXPECT_THROW(tree.express(p->letter(0, 1)), DomainError);
  EXPECT_THROW(alg.evaluate({free_letter(5)}), DomainError);
}
