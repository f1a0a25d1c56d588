#include <gtest/gtest.h>

#include "hk/search.hpp"
#include "hk/verifier.hpp"
#include "support.hpp"

using namespace hk;
using hk::testing::make_ring;
using hk::testing::var;

namespace {

std::int64_t witness_int(const TheoremReport& r, const std::string& key) {
  for (const auto& [k, v] : r.witness) {
    if (k == key) return std::get<std::int64_t>(v);
  }
  throw std::out_of_range("no witness " + key);
}

const TheoremReport& by_id(const std::vector<TheoremReport>& rs, const std::string& id) {
  for (const auto& r : rs) {
    if (r.statement_id == id) return r;
  }
  throw std::out_of_range("no report " + id);
}

}  // namespace

TEST(Verifier, SecondCoefficientVanishingBranch) {
  hk::testing::QuarticCurve ex;
  auto r = check_second_coeff(ex.R, ex.q);
  EXPECT_EQ(r.conclusion, ConclusionStatus::Holds);
  EXPECT_TRUE(r.hypotheses_certified());
  EXPECT_EQ(witness_int(r, "e2"), 0);
  EXPECT_FALSE(r.red_alert());
}

TEST(Verifier, SecondCoefficientNegative) {
  hk::testing::EmbeddedLine ex;
  auto r = check_second_coeff(ex.R, ex.q);
  EXPECT_EQ(r.conclusion, ConclusionStatus::Holds);
  EXPECT_EQ(witness_int(r, "e2"), -1);
}

TEST(Verifier, SecondCoefficientDepthViolated) {
  hk::testing::TripleIntersection ex;
  auto r = check_second_coeff(ex.R, ex.q);
  EXPECT_EQ(r.conclusion, ConclusionStatus::Vacuous);
  EXPECT_EQ(witness_int(r, "e2"), 1);
  bool violated = false;
  for (const auto& h : r.hypotheses) violated = violated || h.status == HypothesisStatus::Violated;
  EXPECT_TRUE(violated);
}

TEST(Verifier, SecondCoefficientNeedsDimensionTwo) {
  auto S = make_ring({"x"});
  QuotientRing R(S);
  auto r = check_second_coeff(R, Ideal::maximal(R));
  EXPECT_EQ(r.conclusion, ConclusionStatus::Vacuous);
  EXPECT_EQ(r.hypotheses.front().status, HypothesisStatus::Violated);
}

TEST(Verifier, ColengthBound) {
  auto S = make_ring({"x", "y"});
  QuotientRing plane(S);
  auto r = check_e0_e1_bound(plane, Ideal::maximal(plane));
  EXPECT_EQ(r.conclusion, ConclusionStatus::Holds);
  EXPECT_EQ(witness_int(r, "colength"), 1);
  EXPECT_EQ(witness_int(r, "e0_minus_e1"), 1);

  hk::testing::EmbeddedLine line;
  auto l = check_e0_e1_bound(line.R, line.q);
  EXPECT_EQ(witness_int(l, "colength"), 10);
  EXPECT_EQ(witness_int(l, "e0_minus_e1"), 11);

  hk::testing::QuarticCurve curve;
  auto c = check_e0_e1_bound(curve.R, curve.q);
  EXPECT_EQ(c.conclusion, ConclusionStatus::Holds);
  EXPECT_LE(witness_int(c, "colength"), 7);
}

TEST(Verifier, DifferenceSignsInDimensionOne) {
  auto S = make_ring({"x", "y"});
  auto x = var(S, "x"), y = var(S, "y");
  QuotientRing R(S, {x * x, x * y});
  VerificationContext ctx(R, Ideal(R, {y}));
  auto r = check_delta_signs(ctx);
  EXPECT_EQ(r.conclusion, ConclusionStatus::Holds);
  EXPECT_EQ(witness_int(r, "violations"), 0);
  // n = -1 is outside the range where the statement applies in dimension one
  EXPECT_EQ(check_delta_signs(ctx, -1, 4).conclusion, ConclusionStatus::Fails);
}

TEST(Verifier, DifferenceSignsOnExamples) {
  hk::testing::EmbeddedLine line;
  EXPECT_EQ(check_delta_signs(line.R, line.q, -1, 6).conclusion, ConclusionStatus::Holds);
  hk::testing::QuarticCurve curve;
  EXPECT_EQ(check_delta_signs(curve.R, curve.q, -1, 6).conclusion, ConclusionStatus::Holds);
}

TEST(Verifier, LastCoefficientFormula) {
  auto S = make_ring({"x", "y"});
  QuotientRing plane(S);
  auto r = check_ed_formula(plane, Ideal::maximal(plane), var(S, "x"));
  EXPECT_EQ(r.conclusion, ConclusionStatus::Holds);
  EXPECT_EQ(witness_int(r, "sum_H_minus_P"), 0);
  EXPECT_EQ(witness_int(r, "sum_colon_lengths"), 0);

  hk::testing::EmbeddedLine line;
  VerificationContext lctx(line.R, line.q);
  auto l = check_ed_formula(lctx);
  EXPECT_EQ(l.conclusion, ConclusionStatus::Holds);
  EXPECT_EQ(witness_int(l, "signed_ed"), -1);
  EXPECT_EQ(witness_int(l, "rhs"), -1);

  hk::testing::QuarticCurve curve;
  VerificationContext cctx(curve.R, curve.q);
  auto c = check_ed_formula(cctx);
  EXPECT_EQ(c.conclusion, ConclusionStatus::Holds);
  EXPECT_EQ(witness_int(c, "rhs"), 0);
}

TEST(Verifier, VanishingOnTripleIntersection) {
  hk::testing::TripleIntersection ex;
  auto rs = check_vanishing(ex.R, ex.q);
  // n(q) = -1 < 0 forces e_3 = 0 without any depth hypothesis
  EXPECT_EQ(by_id(rs, "postulation-vanishing").conclusion, ConclusionStatus::Holds);
  for (const auto& r : rs) EXPECT_FALSE(r.red_alert()) << r.statement_id;
}

TEST(Verifier, VanishingOnEmbeddedLine) {
  hk::testing::EmbeddedLine ex;
  auto rs = check_vanishing(ex.R, ex.q);
  EXPECT_EQ(by_id(rs, "nonpositive-coefficients").conclusion, ConclusionStatus::Holds);
  const auto& alt = by_id(rs, "alternating-sums");
  EXPECT_EQ(alt.conclusion, ConclusionStatus::Holds);
  // j=1: e0 - e1 - λ = 9 + 2 - 10; j=2: -(e0 - e1 + e2 - λ) = -(9 + 2 - 1 - 10)
  for (const auto& [k, v] : alt.witness) {
    if (k == "signed_sums") {
      EXPECT_EQ(std::get<std::vector<std::int64_t>>(v), (std::vector<std::int64_t>{1, 0}));
    }
  }
  EXPECT_EQ(by_id(rs, "defect-stabilization").conclusion, ConclusionStatus::Holds);
}

TEST(Verifier, CohenMacaulayVanishing) {
  auto S = make_ring({"x", "y", "z"});
  QuotientRing R(S, {var(S, "x") * var(S, "y") - var(S, "z") * var(S, "z")});
  auto rs = check_vanishing(R, Ideal(R, {var(S, "x"), var(S, "y")}));
  EXPECT_EQ(by_id(rs, "alternating-sums").conclusion, ConclusionStatus::Holds);
  EXPECT_EQ(by_id(rs, "postulation-vanishing-converse").conclusion, ConclusionStatus::Holds);
  EXPECT_EQ(by_id(rs, "vanishing-propagation").conclusion, ConclusionStatus::Holds);
}

TEST(Verifier, RedAlertNeedsCertifiedHypotheses) {
  TheoremReport r;
  r.conclusion = ConclusionStatus::Fails;
  r.hypotheses.push_back({"h", HypothesisStatus::NotCertified, ""});
  EXPECT_FALSE(r.red_alert());
  r.hypotheses.front().status = HypothesisStatus::Certified;
  EXPECT_TRUE(r.red_alert());
}

TEST(Search, EmptyBudget) { EXPECT_TRUE(search_counterexample(SearchConfig{}, 0).empty()); }

TEST(Search, ReproducibleReports) {
  SearchConfig cfg;
  cfg.seed = 5;
  auto a = search_counterexample(cfg, 4);
  auto b = search_counterexample(cfg, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].reproduction, b[i].reproduction);
    EXPECT_EQ(a[i].seed, b[i].seed);
    EXPECT_EQ(a[i].conclusion, b[i].conclusion);
    EXPECT_FALSE(a[i].red_alert());
  }
}

TEST(Search, CohenMacaulayPairIsVacuous) {
  auto S = make_ring({"x", "y"});
  QuotientRing R(S);
  RingSample s{R, Ideal::maximal(R), 0, "plane"};
  EXPECT_EQ(converse_report(s, {}).conclusion, ConclusionStatus::Vacuous);
}

TEST(Verifier, VerifyAllOnDimensionOne) {
  auto S = make_ring({"x", "y"});
  auto x = var(S, "x"), y = var(S, "y");
  QuotientRing R(S, {x * x, x * y});
  auto rs = verify_all(R, Ideal(R, {y}));
  EXPECT_FALSE(rs.empty());
  for (const auto& r : rs) {
    EXPECT_FALSE(r.red_alert()) << r.statement_id;
    EXPECT_NE(r.statement_id, "second-coefficient");
  }
}
