#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "monodromy/group.hpp"

using namespace monodromy;

namespace {

// Direct composition on one-line permutations, right factor applied first.
std::vector<int> compose_perm(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = p[static_cast<std::size_t>(q[x])];
  return r;
}

void expect_axioms(const FiniteGroup& g) {
  const auto m = static_cast<Element>(g.order());
  for (Element a = 0; a < m; ++a) {
    EXPECT_EQ(g.op(0, a), a);
    EXPECT_EQ(g.op(a, 0), a);
    EXPECT_EQ(g.op(a, g.inverse(a)), 0u);
    EXPECT_EQ(g.op(g.inverse(a), a), 0u);
    EXPECT_EQ(g.order() % g.element_order(a), 0u) << g.label() << " element " << a;
    for (Element b = 0; b < m; ++b)
      for (Element c = 0; c < m; ++c) ASSERT_EQ(g.op(g.op(a, b), c), g.op(a, g.op(b, c)));
  }
}

}  // namespace

TEST(Cyclic, TrivialGroup) {
  FiniteGroup g = make_cyclic(1);
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.table(), (std::vector<std::vector<Element>>{{0}}));
}

TEST(Cyclic, ModularAddition) {
  FiniteGroup c3 = make_cyclic(3);
  EXPECT_EQ(c3.op(1, 2), 0u);
  FiniteGroup c4 = make_cyclic(4);
  EXPECT_EQ(c4.op(1, 3), 0u);
  FiniteGroup c2 = make_cyclic(2);
  EXPECT_EQ(c2.op(1, 1), 0u);
  EXPECT_EQ(c2.names(), (std::vector<std::string>{"1", "x"}));
}

TEST(Cyclic, ZeroOrderRejected) { EXPECT_THROW(make_cyclic(0), InvalidOrder); }

TEST(Symmetric, LexicographicOrderAndComposition) {
  FiniteGroup s3 = make_symmetric(3);
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_EQ(s3.names(), (std::vector<std::string>{"1", "(23)", "(12)", "(123)", "(132)", "(13)"}));
  const Element t12 = *s3.find("(12)"), t13 = *s3.find("(13)");
  EXPECT_EQ(s3.name(s3.op(t12, t13)), "(132)");
}

TEST(Symmetric, MatchesDirectPermutationComposition) {
  for (std::size_t k = 1; k <= 4; ++k) {
    FiniteGroup g = make_symmetric(k);
    std::vector<std::vector<int>> perms;
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    ASSERT_EQ(perms.size(), g.order());
    for (Element a = 0; a < g.order(); ++a)
      for (Element b = 0; b < g.order(); ++b) {
        auto r = compose_perm(perms[a], perms[b]);
        EXPECT_EQ(perms[g.op(a, b)], r);
      }
  }
}

TEST(Symmetric, ReferenceOrderRelabel) {
  const std::vector<std::string> order{"1", "(12)", "(13)", "(23)", "(123)", "(132)"};
  FiniteGroup s3 = make_symmetric(3, order);
  EXPECT_EQ(s3.names(), order);
  EXPECT_EQ(s3.inverse(4), 5u);  // (123)^-1 = (132)
  EXPECT_EQ(s3.op(1, 2), 5u);    // (12)(13) = (132)
  expect_axioms(s3);
}

TEST(Symmetric, TrivialAndLimits) {
  EXPECT_EQ(make_symmetric(1).order(), 1u);
  EXPECT_THROW(make_symmetric(9), SizeLimitError);
  EXPECT_THROW(make_symmetric(3, std::vector<std::string>{"(12)", "1", "(13)", "(23)", "(123)", "(132)"}),
               DomainError);
  EXPECT_THROW(make_symmetric(3, std::vector<std::string>{"1", "(12)"}), DomainError);
}

TEST(Group, ElementOrder) {
  FiniteGroup c6 = make_cyclic(6);
  EXPECT_EQ(c6.element_order(0), 1u);
  EXPECT_EQ(c6.element_order(1), 6u);
  EXPECT_EQ(c6.element_order(2), 3u);
  EXPECT_EQ(c6.element_order(3), 2u);
  EXPECT_THROW(c6.op(6, 0), DomainError);
  EXPECT_THROW(c6.inverse(7), DomainError);
}

TEST(Group, BuiltinsSatisfyAxiomsAndLagrange) {
  for (std::size_t n = 1; n <= 24; ++n) expect_axioms(make_cyclic(n));
  for (std::size_t n = 1; n <= 12; ++n) expect_axioms(make_dihedral(n));
  for (std::size_t k = 1; k <= 4; ++k) expect_axioms(make_symmetric(k));
}

TEST(Dihedral, Relations) {
  FiniteGroup d4 = make_dihedral(4);
  EXPECT_EQ(d4.order(), 8u);
  const Element r = *d4.find("r"), s = *d4.find("s");
  EXPECT_EQ(d4.element_order(r), 4u);
  EXPECT_EQ(d4.element_order(s), 2u);
  // s r s = r^-1
  EXPECT_EQ(d4.op(d4.op(s, r), s), d4.inverse(r));
  EXPECT_FALSE(d4.is_abelian());
}

TEST(GroupSpec, Builtins) {
  auto gs = parse_group_spec("C2,C3");
  ASSERT_EQ(gs.size(), 2u);
  EXPECT_EQ(gs[0], make_cyclic(2));
  EXPECT_EQ(gs[1], make_cyclic(3));
  gs = parse_group_spec("C2,S3");
  EXPECT_EQ(gs[1], make_symmetric(3));
  gs = parse_group_spec("C1");
  EXPECT_EQ(gs[0].order(), 1u);
  gs = parse_group_spec("D3,S3[1 (12) (13) (23) (123) (132)]");
  EXPECT_EQ(gs[0].order(), 6u);
  EXPECT_EQ(gs[1].name(1), "(12)");
}

TEST(GroupSpec, ParseErrorsCarryPosition) {
  try {
    parse_group_spec("C2,X3");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(parse_group_spec(""), ParseError);
  EXPECT_THROW(parse_group_spec("C"), ParseError);
  EXPECT_THROW(parse_group_spec("C2,"), ParseError);
  EXPECT_THROW(parse_group_spec("C2;C3"), ParseError);
  EXPECT_THROW(parse_group_spec("C0"), ParseError);
  EXPECT_THROW(parse_group_spec("S3[1 (12)"), ParseError);
}

TEST(GroupSpec, TableFile) {
  auto gs = parse_group_spec(std::string("C2,table:") + MONODROMY_TEST_DATA + "/klein4.json");
  ASSERT_EQ(gs.size(), 2u);
  EXPECT_EQ(gs[1].order(), 4u);
  EXPECT_TRUE(gs[1].is_abelian());
  expect_axioms(gs[1]);
}

TEST(GroupSpec, TableValidationNamesAxiom) {
  try {
    parse_group_spec(std::string("table:") + MONODROMY_TEST_DATA + "/not_associative.json");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.axiom(), "inverse");  // a*b = b*a = e with a != b, and a*a = e too
  }
  try {
    parse_group_spec(std::string("table:") + MONODROMY_TEST_DATA + "/no_identity.json");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.axiom(), "identity");
  }
}

TEST(GroupJson, AssociativityFailureDetected) {
  // Latin square with identity 0 and unique inverses, not associative.
  nlohmann::json j = {{"order", 5},
                      {"names", {"e", "a", "b", "c", "d"}},
                      {"table",
                       {{0, 1, 2, 3, 4},
                        {1, 0, 3, 4, 2},
                        {2, 4, 0, 1, 3},
                        {3, 2, 4, 0, 1},
                        {4, 3, 1, 2, 0}}}};
  try {
    group_from_json(j);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.axiom(), "associativity");
  }
}

TEST(GroupJson, RoundTrip) {
  FiniteGroup s3 = make_symmetric(3);
  FiniteGroup back = group_from_json(group_to_json(s3));
  EXPECT_EQ(back, s3);
  EXPECT_THROW(group_from_json(nlohmann::json{{"order", 2}}), ValidationError);
}
