#include <gtest/gtest.h>

#include "hk/ideal.hpp"
#include "support.hpp"

using namespace hk;
using hk::testing::cst;
using hk::testing::make_ring;
using hk::testing::var;

TEST(QuotientRing, RejectsUnitIdeal) {
  auto S = make_ring({"x"});
  EXPECT_THROW(QuotientRing(S, {cst(S, 1)}), std::invalid_argument);
}

TEST(QuotientRing, DimensionFromLeadingTerms) {
  auto S = make_ring({"x", "y", "z"});
  auto x = var(S, "x"), y = var(S, "y"), z = var(S, "z");
  EXPECT_EQ(QuotientRing(S).dimension(), 3u);
  EXPECT_EQ(QuotientRing(S, {x * y, x * z}).dimension(), 2u);
  EXPECT_EQ(QuotientRing(S, {x, y * y, z - y}).dimension(), 0u);
}

TEST(QuotientRing, ZeroTest) {
  auto S = make_ring({"x", "y"});
  auto x = var(S, "x"), y = var(S, "y");
  QuotientRing R(S, {x * x, x * y});
  EXPECT_TRUE(R.is_zero(x * x * y + x * y));
  EXPECT_FALSE(R.is_zero(x));
}

TEST(Ideal, IntersectionOfMonomialIdealsIsLcm) {
  auto S = make_ring({"x", "y"});
  QuotientRing A(S);
  auto x = var(S, "x"), y = var(S, "y");
  Ideal I = intersect(Ideal(A, {x * x, y}), Ideal(A, {x, y * y * y}));
  // lcm oracle: (x^2, y) ∩ (x, y^3) = (x^2, xy, y^3)
  EXPECT_TRUE(ideal_equal(I, Ideal(A, {x * x, x * y, y.pow(3)})));
}

TEST(Ideal, IntersectionWithLinearComponent) {
  auto S = make_ring({"x", "y", "z", "t"});
  QuotientRing A(S);
  auto x = var(S, "x"), y = var(S, "y"), z = var(S, "z"), t = var(S, "t");
  Ideal a(A, {x * x, z.pow(4)}), b(A, {x - y, z + t});
  Ideal I = intersect(a, b);
  EXPECT_TRUE(is_subset(I, a));
  EXPECT_TRUE(is_subset(I, b));
  EXPECT_TRUE(is_subset(a * b, I));
}

TEST(Ideal, ColonByVariable) {
  auto S = make_ring({"x", "y"});
  QuotientRing A(S);
  auto x = var(S, "x"), y = var(S, "y");
  EXPECT_TRUE(ideal_equal(colon(Ideal(A, {x * x, x * y}), x), Ideal(A, {x, y})));
  EXPECT_TRUE(ideal_equal(colon(Ideal(A, {x * x, x * y}), y), Ideal(A, {x})));
}

TEST(Ideal, ColonInQuotient) {
  auto S = make_ring({"x", "y"});
  auto x = var(S, "x"), y = var(S, "y");
  QuotientRing R(S, {x * x, x * y});
  // (0 : y) = (x) and (0 : x) = (x, y) in k[x,y]/(x^2, xy)
  EXPECT_TRUE(ideal_equal(colon(Ideal::zero(R), y), Ideal(R, {x})));
  EXPECT_TRUE(ideal_equal(colon(Ideal::zero(R), x), Ideal::maximal(R)));
  EXPECT_THROW(colon(Ideal::zero(R), x * x), std::domain_error);
}

TEST(Ideal, ColonByIdeal) {
  auto S = make_ring({"x", "y", "z"});
  QuotientRing A(S);
  auto x = var(S, "x"), y = var(S, "y"), z = var(S, "z");
  Ideal I(A, {x * y, x * z});
  EXPECT_TRUE(ideal_equal(colon(I, Ideal(A, {y, z})), Ideal(A, {x})));
}

TEST(Ideal, PowersAndProducts) {
  auto S = make_ring({"x", "y"});
  QuotientRing A(S);
  auto x = var(S, "x"), y = var(S, "y");
  Ideal m = Ideal::maximal(A);
  EXPECT_TRUE(power(m, 0).is_unit());
  EXPECT_TRUE(ideal_equal(power(m, 2), Ideal(A, {x * x, x * y, y * y})));
  EXPECT_TRUE(ideal_equal(m * m, power(m, 2)));
  EXPECT_TRUE(ideal_equal(m + Ideal(A, {x}), m));
}

TEST(Ideal, Elimination) {
  auto S = make_ring({"t", "x", "y"})->with_order(MonomialOrder::elimination(1));
  auto t = var(S, "t"), x = var(S, "x"), y = var(S, "y");
  auto T = make_ring({"x", "y"});
  // image of t -> (t^2, t^3) is the cusp y^2 = x^3
  auto gens = eliminate({x - t * t, y - t.pow(3)}, 1, T);
  QuotientRing A(T);
  EXPECT_TRUE(ideal_equal(Ideal(A, gens), Ideal(A, {var(T, "y").pow(2) - var(T, "x").pow(3)})));
}

TEST(Ideal, ExactDivision) {
  auto S = make_ring({"x", "y"});
  auto x = var(S, "x"), y = var(S, "y");
  EXPECT_EQ(exact_divide((x + y) * (x - y), x - y), x + y);
  EXPECT_THROW(exact_divide(x * x + y, x), std::domain_error);
}

TEST(Ideal, RingMismatch) {
  auto S = make_ring({"x", "y"});
  QuotientRing A(S), B(S, {var(S, "x")});
  EXPECT_THROW(is_subset(Ideal::maximal(A), Ideal::maximal(B)), RingMismatch);
}
