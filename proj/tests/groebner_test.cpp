#include <gtest/gtest.h>

#include "hk/groebner.hpp"
#include "support.hpp"

using namespace hk;
using hk::testing::cst;
using hk::testing::make_ring;
using hk::testing::var;

namespace {

GroebnerBasis gb(std::vector<Polynomial> gens, const RingPtr& S, MonomialOrder ord = MonomialOrder::grevlex()) {
  gens.push_back(Polynomial(S));
  return buchberger(std::move(gens), ord);
}

}  // namespace

TEST(Groebner, TwistedCubic) {
  auto S = make_ring({"x", "y", "z", "w"});
  auto x = var(S, "x"), y = var(S, "y"), z = var(S, "z"), w = var(S, "w");
  auto G = gb({x * z - y * y, y * w - z * z, x * w - y * z}, S);
  EXPECT_TRUE(G.verify());
  EXPECT_EQ(G.size(), 3u);
  EXPECT_TRUE(G.contains(x * z * w - y * y * w));
  EXPECT_FALSE(G.contains(x * w));
}

TEST(Groebner, LexEliminatesToUnivariate) {
  auto S = make_ring({"x", "y"})->with_order(MonomialOrder::lex());
  auto x = var(S, "x"), y = var(S, "y");
  auto G = gb({x * x + y * y - cst(S, 1), x - y}, S, MonomialOrder::lex());
  ASSERT_TRUE(G.verify());
  // last element lies in k[y]: 2y^2 - 1 up to scaling
  const auto& last = G.generators().back();
  for (const auto& t : last.terms()) EXPECT_EQ(t.mono[0], 0u);
  EXPECT_EQ(last.total_degree(), 2u);
}

TEST(Groebner, UnitAndZeroIdeal) {
  auto S = make_ring({"x", "y"});
  auto x = var(S, "x");
  EXPECT_TRUE(gb({x, x - cst(S, 1)}, S).is_unit_ideal());
  EXPECT_TRUE(gb({}, S).is_zero_ideal());
}

TEST(Groebner, ReducedBasisIsMonicAndTailReduced) {
  auto S = make_ring({"x", "y", "z"});
  auto x = var(S, "x"), y = var(S, "y"), z = var(S, "z");
  auto G = gb({(x * y - z * z).scale(7), x * x - y * z, x * z + y * y}, S);
  for (std::size_t i = 0; i < G.size(); ++i) {
    const auto& g = G.generators()[i];
    EXPECT_EQ(g.leading_coefficient(), 1u);
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : g.terms()) EXPECT_FALSE(G.leading_monomials()[j].divides(t.mono));
    }
  }
}

TEST(Groebner, CanonicalUnderGeneratorPermutation) {
  auto S = make_ring({"x", "y", "z"});
  auto x = var(S, "x"), y = var(S, "y"), z = var(S, "z");
  std::vector<Polynomial> gens = {x * y - z * z, x * x - y * z + z * z, y * y * z - x * z * z};
  auto G1 = gb(gens, S);
  std::reverse(gens.begin(), gens.end());
  auto G2 = gb(gens, S);
  EXPECT_EQ(G1, G2);
}

TEST(Groebner, NormalFormIdempotentAndEquivalent) {
  auto S = make_ring({"x", "y"});
  auto x = var(S, "x"), y = var(S, "y");
  auto G = gb({x * x - y, y * y - x}, S);
  Polynomial f = x.pow(5) + x * y.pow(3) - cst(S, 2);
  Polynomial r = normal_form(f, G);
  EXPECT_EQ(normal_form(r, G), r);
  EXPECT_TRUE(ideal_membership(f - r, G));
}

TEST(Groebner, MembershipAgreesWithLinearAlgebra) {
  auto S = make_ring({"x", "y", "z"});
  auto x = var(S, "x"), y = var(S, "y"), z = var(S, "z");
  std::vector<Polynomial> gens = {x * y - z * z, y * y - x * z};
  auto G = gb(gens, S);
  std::vector<Polynomial> probes = {x * y * y - x * x * z, z * (x * y - z * z) + y * (y * y - x * z), x * x * y,
                                    y.pow(3) - x * y * z, x * x - y * z};
  for (const auto& f : probes) EXPECT_EQ(G.contains(f), hk::testing::linear_algebra_member(gens, f)) << f;
}

TEST(Groebner, SPolynomialCancelsLeadingTerms) {
  auto S = make_ring({"x", "y"});
  auto x = var(S, "x"), y = var(S, "y");
  Polynomial s = GroebnerBasis::s_polynomial(x * x * y - y, x * y * y - x);
  EXPECT_EQ(s, x * x - y * y);
}
