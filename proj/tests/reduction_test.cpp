#include <gtest/gtest.h>

#include "hk/random_rings.hpp"
#include "hk/reduction.hpp"
#include "hk/verifier.hpp"
#include "support.hpp"

using namespace hk;
using hk::testing::make_ring;
using hk::testing::var;

TEST(SeededRng, Deterministic) {
  SeededRng a(42), b(42), c(43);
  for (int i = 0; i < 10; ++i) {
    auto x = a.next();
    EXPECT_EQ(x, b.next());
    EXPECT_NE(x, c.next());
  }
  EXPECT_EQ(SeededRng::derive(1, 2, 3), SeededRng::derive(1, 2, 3));
  EXPECT_NE(SeededRng::derive(1, 2, 3), SeededRng::derive(1, 3, 2));
}

TEST(SeededRng, NonzeroFieldElements) {
  PrimeField F(7);
  SeededRng r(5);
  for (int i = 0; i < 200; ++i) {
    auto v = r.nonzero(F);
    EXPECT_GE(v, 1u);
    EXPECT_LT(v, 7u);
  }
}

TEST(Reduction, NonZeroDivisors) {
  auto S = make_ring({"x", "y"});
  auto x = var(S, "x"), y = var(S, "y");
  QuotientRing R(S, {x * x, x * y});
  EXPECT_FALSE(is_nzd(R, y));
  EXPECT_FALSE(is_nzd(R, x));
  EXPECT_THROW(is_nzd(R, x * x), std::domain_error);
  EXPECT_EQ(annihilator_length(R, y).value(), 1u);
  QuotientRing plane(S);
  EXPECT_TRUE(is_nzd(plane, x + y));
}

TEST(Reduction, SuperficialInPlane) {
  auto S = make_ring({"x", "y"});
  QuotientRing R(S);
  Ideal m = Ideal::maximal(R);
  auto good = superficial_certificate(R, m, var(S, "x"));
  EXPECT_TRUE(good.verdict);
  for (auto r : good.nagata_residuals) EXPECT_EQ(r, 0);
  EXPECT_FALSE(superficial_certificate(R, m, var(S, "x").pow(2)).verdict);
  EXPECT_THROW(superficial_certificate(R, Ideal(R, {var(S, "x").pow(2), var(S, "y")}), var(S, "x")),
               std::invalid_argument);
}

TEST(Reduction, SuperficialWithTorsion) {
  auto S = make_ring({"x", "y"});
  auto x = var(S, "x"), y = var(S, "y");
  QuotientRing R(S, {x * x, x * y});
  // y is superficial for m but a zero-divisor; λ(0:y) = 1 enters the identity
  auto cert = superficial_certificate(R, Ideal::maximal(R), y);
  EXPECT_TRUE(cert.verdict);
  EXPECT_EQ(cert.annihilator_length.value(), 1u);
}

TEST(Reduction, SuperficialSequenceReproducible) {
  hk::testing::EmbeddedLine ex;
  auto a = find_superficial_sequence(ex.R, ex.q, 2, false, 9);
  auto b = find_superficial_sequence(ex.R, ex.q, 2, false, 9);
  ASSERT_TRUE(a.ok);
  EXPECT_EQ(a.elements, b.elements);
  EXPECT_THROW(find_superficial_sequence(ex.R, ex.q, 3, false, 9), std::invalid_argument);
}

TEST(Reduction, DepthOfSmallRings) {
  auto S = make_ring({"x", "y"});
  auto x = var(S, "x"), y = var(S, "y");
  auto plane = depth_estimate(QuotientRing(S), 8, 1);
  EXPECT_EQ(plane.lower_bound, 2u);
  EXPECT_TRUE(plane.exact);
  auto embedded = depth_estimate(QuotientRing(S, {x * x, x * y}), 8, 1);
  EXPECT_EQ(embedded.lower_bound, 0u);
  EXPECT_TRUE(embedded.exact);
  ASSERT_TRUE(embedded.socle_witness.has_value());
}

TEST(Reduction, DepthOfExampleRings) {
  EXPECT_EQ(depth_estimate(hk::testing::TripleIntersection().R, 8, 0).lower_bound, 1u);
  EXPECT_EQ(depth_estimate(hk::testing::QuarticCurve().R, 8, 0).lower_bound, 1u);
  auto d = depth_estimate(hk::testing::EmbeddedLine().R, 8, 0);
  EXPECT_EQ(d.lower_bound, 1u);
  EXPECT_TRUE(d.exact);
}

TEST(Reduction, GradeCertificates) {
  hk::testing::QuarticCurve curve;
  EXPECT_TRUE(grade_gr_lower_bound(curve.R, curve.q, 1, std::nullopt, 3).certified);
  hk::testing::EmbeddedLine line;
  auto g = grade_gr_lower_bound(line.R, line.q, 1, std::nullopt, 3);
  EXPECT_TRUE(g.certified);
  EXPECT_GE(g.check_bound, 6);
  EXPECT_TRUE(grade_gr_lower_bound(line.R, line.q, 0).certified);
}

TEST(Reduction, RandomInIdealAvoidsExcludedIdeal) {
  auto S = make_ring({"x", "y"});
  QuotientRing R(S);
  Ideal m = Ideal::maximal(R);
  auto y = random_in_ideal(m, m * m, 17);
  EXPECT_TRUE(m.contains(y));
  EXPECT_FALSE((m * m).contains(y));
  EXPECT_THROW(random_in_ideal(m * m, m, 17), TrialsExhausted);
}

namespace {

std::int64_t postulation_or_floor(const HilbertData& f) { return f.postulation ? *f.postulation : f.postulation_floor; }

}  // namespace

TEST(Reduction, PostulationShiftsUnderGradeCertificate) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    auto s = random_parameter_pair(GeneratorConfig{}, seed);
    if (!s) continue;
    VerificationContext ctx(s->ring, s->q);
    if (!ctx.grade().certified) continue;
    auto seq = find_superficial_sequence(s->ring, s->q, 1, true, seed);
    if (!seq.ok) continue;
    auto cert = superficial_certificate(s->ring, s->q, seq.elements.front());
    ASSERT_TRUE(cert.fit.postulation && cert.reduced_fit.postulation) << session_text(s->ring, s->q);
    EXPECT_EQ(*cert.reduced_fit.postulation, *cert.fit.postulation + 1) << session_text(s->ring, s->q);
    ++checked;
  }
  EXPECT_GE(checked, 8u);
}

TEST(Reduction, PostulationShiftCanFailWithoutGradeCertificate) {
  auto S = make_ring({"x", "y", "z", "u", "v"});
  auto x = var(S, "x"), y = var(S, "y"), z = var(S, "z"), u = var(S, "u"), v = var(S, "v");
  QuotientRing R(S, {u.pow(3), z.pow(2), v.pow(3), x * y * v});
  Ideal q(R, {y + z.scale(2) + u.scale(2) - v.scale(3), -x - z - v});
  auto e = [&](std::int64_t c) { return S->field().from_int(c); };
  Polynomial g = x.scale(e(-14148)) + y.scale(e(7785)) + z.scale(e(1422)) + u.scale(e(15570)) + v.scale(e(-5500));
  ASSERT_TRUE(is_nzd(R, g));
  auto cert = superficial_certificate(R, q, g);
  ASSERT_TRUE(cert.verdict);
  EXPECT_EQ(postulation_or_floor(cert.fit), 6);
  EXPECT_EQ(postulation_or_floor(cert.reduced_fit), 5);
  EXPECT_FALSE(VerificationContext(R, q).grade().certified);
}
