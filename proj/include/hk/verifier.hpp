#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hk/format.hpp"
#include "hk/hilbert.hpp"
#include "hk/reduction.hpp"

namespace hk {

enum class HypothesisStatus { Certified, NotCertified, Violated };
enum class ConclusionStatus { Holds, Fails, Vacuous, Inconclusive };

inline const char* to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::Certified: return "certified";
    case HypothesisStatus::NotCertified: return "not-certified";
    case HypothesisStatus::Violated: return "violated";
  }
  return "?";
}

inline const char* to_string(ConclusionStatus s) {
  switch (s) {
    case ConclusionStatus::Holds: return "holds";
    case ConclusionStatus::Fails: return "fails";
    case ConclusionStatus::Vacuous: return "vacuous";
    case ConclusionStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

using WitnessValue = std::variant<std::int64_t, bool, std::string, std::vector<std::int64_t>>;

struct Hypothesis {
  std::string name;
  HypothesisStatus status = HypothesisStatus::NotCertified;
  std::string detail;
};

struct TheoremReport {
  std::string statement_id;
  std::string statement;
  std::vector<Hypothesis> hypotheses;
  ConclusionStatus conclusion = ConclusionStatus::Vacuous;
  std::vector<std::pair<std::string, WitnessValue>> witness;
  /// session text reproducing the ring and ideal
  std::string reproduction;
  std::uint64_t seed = 0;

  bool hypotheses_certified() const {
    return std::all_of(hypotheses.begin(), hypotheses.end(),
                       [](const Hypothesis& h) { return h.status == HypothesisStatus::Certified; });
  }
  /// A certified failure: either a bug or a counterexample.
  bool red_alert() const { return conclusion == ConclusionStatus::Fails && hypotheses_certified(); }

  void add(std::string key, WitnessValue v) { witness.emplace_back(std::move(key), std::move(v)); }
};

struct VerifyOptions {
  FitOptions fit;
  std::uint64_t seed = 0;
  int trials = 8;
  std::optional<long> grade_bound;
};

/// Lazily computed data shared by the checks on one (R, q).
class VerificationContext {
 public:
  VerificationContext(QuotientRing R, Ideal q, VerifyOptions opt = {})
      : R_(std::move(R)), q_(std::move(q)), opt_(opt) {
    if (!(q_.ring() == R_)) throw RingMismatch("ideal does not belong to the ring");
  }

  const QuotientRing& ring() const { return R_; }
  const Ideal& ideal() const { return q_; }
  const VerifyOptions& options() const { return opt_; }
  std::size_t dim() const { return R_.dimension(); }

  const HilbertData& fit() {
    if (!fit_) fit_ = fit_coefficients(R_, q_, opt_.fit);
    return *fit_;
  }
  std::int64_t colength() {
    if (!colength_) colength_ = length(q_).as_int();
    return *colength_;
  }
  const DepthEstimate& depth() {
    if (!depth_) depth_ = depth_estimate(R_, opt_.trials, SeededRng::derive(opt_.seed, 0xDE97));
    return *depth_;
  }
  /// Certificate for grade gr_q(R)_+ >= d - 1.
  const GradeCertificate& grade() {
    if (!grade_) {
      const std::size_t k = dim() == 0 ? 0 : dim() - 1;
      long K = opt_.grade_bound ? *opt_.grade_bound : default_grade_bound(fit());
      grade_ = grade_gr_lower_bound(R_, q_, k, K, SeededRng::derive(opt_.seed, 0x96ADE), opt_.trials);
    }
    return *grade_;
  }

  Hypothesis parameter_hypothesis() {
    Hypothesis h{"q is a parameter ideal", HypothesisStatus::NotCertified, ""};
    std::size_t nonzero = 0;
    for (const auto& g : q_.generators()) {
      if (!R_.is_zero(g)) ++nonzero;
    }
    const bool finite = length(q_).is_finite();
    h.detail = std::to_string(nonzero) + " generators, dim " + std::to_string(dim()) +
               (finite ? ", finite colength" : ", infinite colength");
    if (!finite || nonzero < dim()) h.status = HypothesisStatus::Violated;
    else if (nonzero == dim()) h.status = HypothesisStatus::Certified;
    return h;
  }

  Hypothesis depth_hypothesis(std::size_t need) {
    const auto& dep = depth();
    Hypothesis h{"depth R >= " + std::to_string(need), HypothesisStatus::NotCertified, ""};
    h.detail = "regular sequence of length " + std::to_string(dep.lower_bound) +
               (dep.exact ? " with nonzero socle (depth exact)" : " (depth not pinned)");
    if (dep.lower_bound >= need) h.status = HypothesisStatus::Certified;
    else if (dep.exact) h.status = HypothesisStatus::Violated;
    return h;
  }

  Hypothesis grade_hypothesis() {
    const std::size_t need = dim() == 0 ? 0 : dim() - 1;
    Hypothesis h{"grade gr_q(R)_+ >= " + std::to_string(need), HypothesisStatus::NotCertified, ""};
    const auto& g = grade();
    h.detail = g.certified ? "bounded certificate up to q^" + std::to_string(g.check_bound)
                           : "no certificate (stage " + std::to_string(g.failed_stage + 1) + ")";
    if (g.certified) h.status = HypothesisStatus::Certified;
    return h;
  }

  TheoremReport report(std::string id, std::string statement) {
    TheoremReport r;
    r.statement_id = std::move(id);
    r.statement = std::move(statement);
    r.reproduction = session_text(R_, q_);
    r.seed = opt_.seed;
    return r;
  }

 private:
  QuotientRing R_;
  Ideal q_;
  VerifyOptions opt_;
  std::optional<HilbertData> fit_;
  std::optional<std::int64_t> colength_;
  std::optional<DepthEstimate> depth_;
  std::optional<GradeCertificate> grade_;
};

namespace detail {

inline ConclusionStatus worse(ConclusionStatus a, ConclusionStatus b) {
  auto rank = [](ConclusionStatus s) {
    switch (s) {
      case ConclusionStatus::Vacuous: return 0;
      case ConclusionStatus::Holds: return 1;
      case ConclusionStatus::Inconclusive: return 2;
      case ConclusionStatus::Fails: return 3;
    }
    return 0;
  };
  return rank(a) >= rank(b) ? a : b;
}

inline bool all_certified(const std::vector<Hypothesis>& hs) {
  return std::all_of(hs.begin(), hs.end(), [](const Hypothesis& h) { return h.status == HypothesisStatus::Certified; });
}

inline void add_fit_witness(TheoremReport& r, const HilbertData& f) {
  r.add("e", f.coeffs);
  r.add("polynomial", binomial_basis_string(f.coeffs));
  r.add("postulation", f.postulation_string());
}

/// (-1)^k-free k-th forward difference of g at n.
template <class G>
std::int64_t forward_difference(const G& g, std::int64_t n, long k) {
  std::int64_t s = 0;
  for (long j = 0; j <= k; ++j) {
    std::int64_t term = binomial(k, j) * g(n + j);
    s += ((k - j) % 2 == 0) ? term : -term;
  }
  return s;
}

}  // namespace detail

/// e_2 <= 0; e_2 = 0 iff n(q) < 2-d and grade gr_q(R)_+ >= d-1; e_2 = 0
/// forces e_3 = ... = e_d = 0.  Hypotheses: d >= 2, depth R >= d-1.
inline TheoremReport check_second_coeff(VerificationContext& ctx) {
  TheoremReport r = ctx.report("second-coefficient",
                               "depth R >= d-1 implies e2 <= 0, (e2 = 0 iff n(q) < 2-d and grade gr_q(R)_+ >= d-1), "
                               "and e2 = 0 implies e3 = ... = ed = 0");
  const std::size_t d = ctx.dim();
  r.hypotheses.push_back({"dim R >= 2", d >= 2 ? HypothesisStatus::Certified : HypothesisStatus::Violated,
                          "dim " + std::to_string(d)});
  r.hypotheses.push_back(ctx.parameter_hypothesis());
  if (d < 2) {
    r.conclusion = ConclusionStatus::Vacuous;
    return r;
  }
  const auto& f = ctx.fit();
  detail::add_fit_witness(r, f);
  r.add("e2", f.e(2));
  r.hypotheses.push_back(ctx.depth_hypothesis(d - 1));
  r.add("depth_lower_bound", static_cast<std::int64_t>(ctx.depth().lower_bound));
  r.add("depth_exact", ctx.depth().exact);
  if (!detail::all_certified(r.hypotheses)) {
    r.conclusion = ConclusionStatus::Vacuous;
    return r;
  }
  const std::int64_t e2 = f.e(2);
  const bool post_ok = f.postulation_below(2 - static_cast<std::int64_t>(d));
  const bool grade_ok = ctx.grade().certified;
  r.add("postulation_below_2_minus_d", post_ok);
  r.add("grade_certified", grade_ok);

  ConclusionStatus part1 = e2 <= 0 ? ConclusionStatus::Holds : ConclusionStatus::Fails;
  ConclusionStatus part2;
  if (e2 == 0) {
    if (!post_ok) part2 = ConclusionStatus::Fails;
    else part2 = grade_ok ? ConclusionStatus::Holds : ConclusionStatus::Inconclusive;
  } else {
    part2 = (post_ok && grade_ok) ? ConclusionStatus::Fails : ConclusionStatus::Holds;
  }
  ConclusionStatus part3 = ConclusionStatus::Vacuous;
  if (e2 == 0) {
    part3 = ConclusionStatus::Holds;
    for (std::size_t j = 3; j <= d; ++j) {
      if (f.e(j) != 0) part3 = ConclusionStatus::Fails;
    }
  }
  r.add("part1", std::string(to_string(part1)));
  r.add("part2", std::string(to_string(part2)));
  r.add("part3", std::string(to_string(part3)));
  r.conclusion = detail::worse(detail::worse(part1, part2), part3);
  return r;
}

/// λ(R/q) <= e0 - e1 under d >= 2 and depth R >= d-1.
inline TheoremReport check_e0_e1_bound(VerificationContext& ctx) {
  TheoremReport r = ctx.report("colength-bound", "depth R >= d-1 implies length(R/q) <= e0 - e1");
  const std::size_t d = ctx.dim();
  r.hypotheses.push_back({"dim R >= 2", d >= 2 ? HypothesisStatus::Certified : HypothesisStatus::Violated,
                          "dim " + std::to_string(d)});
  r.hypotheses.push_back(ctx.parameter_hypothesis());
  if (d < 2) return r;
  r.hypotheses.push_back(ctx.depth_hypothesis(d - 1));
  const auto& f = ctx.fit();
  const std::int64_t colength = ctx.colength();
  r.add("colength", colength);
  r.add("e0_minus_e1", f.e(0) - f.e(1));
  if (!detail::all_certified(r.hypotheses)) return r;
  r.conclusion = colength <= f.e(0) - f.e(1) ? ConclusionStatus::Holds : ConclusionStatus::Fails;
  return r;
}

/// (-1)^i Δ^{d+1-i}(P - H)(n) >= 0 for 0 <= i <= d+1 and n in [n_lo, n_hi],
/// under grade gr_q(R)_+ >= d-1.  With H = 0 on n <= 0 the range must start
/// at 0 in dimension one, where Δ^2(P - H)(-1) = -λ(R/q).
inline TheoremReport check_delta_signs(VerificationContext& ctx, std::int64_t n_lo, std::int64_t n_hi) {
  TheoremReport r = ctx.report("difference-signs",
                               "grade gr_q(R)_+ >= d-1 implies (-1)^i Delta^{d+1-i}(P-H)(n) >= 0 for 0 <= i <= d+1");
  r.hypotheses.push_back(ctx.parameter_hypothesis());
  r.hypotheses.push_back(ctx.grade_hypothesis());
  const auto& f = ctx.fit();
  const long d = static_cast<long>(f.dim);
  auto g = [&](std::int64_t n) { return f.P(n) - f.H(n); };
  std::vector<std::int64_t> defect;
  for (std::int64_t n = n_lo; n <= n_hi; ++n) defect.push_back(g(n));
  r.add("n_range", std::vector<std::int64_t>{n_lo, n_hi});
  r.add("defect", defect);
  std::int64_t violations = 0;
  std::string first;
  for (long i = 0; i <= d + 1; ++i) {
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
      std::int64_t v = detail::forward_difference(g, n, d + 1 - i);
      if (i % 2) v = -v;
      if (v < 0) {
        if (violations == 0) first = "i=" + std::to_string(i) + ", n=" + std::to_string(n);
        ++violations;
      }
    }
  }
  r.add("violations", violations);
  if (violations) r.add("first_violation", first);
  if (!detail::all_certified(r.hypotheses)) {
    r.conclusion = ConclusionStatus::Vacuous;
    return r;
  }
  r.conclusion = violations == 0 ? ConclusionStatus::Holds : ConclusionStatus::Fails;
  return r;
}

inline TheoremReport check_delta_signs(VerificationContext& ctx) {
  const auto& f = ctx.fit();
  return check_delta_signs(ctx, f.dim >= 2 ? -1 : 0, f.window_hi);
}

/// (-1)^d e_d(I) = Σ_k (H_Ī(k) - P_Ī(k)) - Σ_k λ((I^k : y)/I^{k-1}) for a
/// superficial non-zero-divisor y, Ī = I R/(y); sums truncated once both
/// summands vanish for guard+1 consecutive k past n(Ī).
inline TheoremReport check_ed_formula(const QuotientRing& R, const Ideal& I, const Polynomial& y,
                                      const VerifyOptions& opt = {}) {
  VerificationContext ctx(R, I, opt);
  TheoremReport r = ctx.report("last-coefficient-formula",
                               "for a superficial non-zero-divisor y: (-1)^d e_d(I) = "
                               "sum_k (H_{I/(y)}(k) - P_{I/(y)}(k)) - sum_k length((I^k : y)/I^{k-1})");
  r.add("y", y.to_string());
  const bool nzd = !R.is_zero(y) && is_nzd(R, y);
  r.hypotheses.push_back({"y is a non-zero-divisor", nzd ? HypothesisStatus::Certified : HypothesisStatus::Violated, ""});
  auto cert = superficial_certificate(R, I, y, opt.fit);
  r.hypotheses.push_back({"y is superficial", cert.verdict ? HypothesisStatus::Certified : HypothesisStatus::NotCertified,
                          "Nagata identity residuals " + std::string(cert.verdict ? "all zero" : "nonzero")});
  const auto& f = cert.fit;
  const long d = static_cast<long>(f.dim);
  const std::int64_t lhs = (d % 2 == 0) ? f.e(d) : -f.e(d);
  r.add("e", f.coeffs);
  r.add("signed_ed", lhs);
  if (!cert.annihilator_length.is_finite()) {
    r.conclusion = ConclusionStatus::Vacuous;
    return r;
  }

  const auto& fb = cert.reduced_fit;
  const std::int64_t start = fb.postulation ? *fb.postulation : fb.postulation_floor;
  std::int64_t sum_h = 0, sum_colon = 0;
  int quiet = 0;
  bool truncated = false;
  std::int64_t k = 1;
  Ideal prev = Ideal::unit(R);  // I^{k-1}
  for (; k <= opt.fit.n_max; ++k) {
    Ideal cur = power(I, k);
    std::int64_t a = fb.H(k) - fb.P(k);
    std::int64_t b = quotient_length(prev, colon(cur, y)).as_int();
    sum_h += a;
    sum_colon += b;
    quiet = (a == 0 && b == 0) ? quiet + 1 : 0;
    prev = std::move(cur);
    if (k > start && quiet >= opt.fit.guard + 1) {
      truncated = true;
      break;
    }
  }
  r.add("sum_H_minus_P", sum_h);
  r.add("sum_colon_lengths", sum_colon);
  r.add("truncation", k);
  r.add("rhs", sum_h - sum_colon);
  if (!truncated) {
    r.hypotheses.push_back({"sums truncate", HypothesisStatus::NotCertified, "summands still nonzero at n_max"});
    r.conclusion = ConclusionStatus::Inconclusive;
    return r;
  }
  if (!detail::all_certified(r.hypotheses)) {
    r.conclusion = ConclusionStatus::Vacuous;
    return r;
  }
  r.conclusion = lhs == sum_h - sum_colon ? ConclusionStatus::Holds : ConclusionStatus::Fails;
  return r;
}

/// Picks a generic superficial non-zero-divisor in q \ m q and runs the e_d
/// formula check with it.
inline TheoremReport check_ed_formula(VerificationContext& ctx) {
  auto seq = find_superficial_sequence(ctx.ring(), ctx.ideal(), 1, true, SeededRng::derive(ctx.options().seed, 0x5EF),
                                       ctx.options().trials, ctx.options().fit);
  if (!seq.ok) {
    TheoremReport r = ctx.report("last-coefficient-formula",
                                 "for a superficial non-zero-divisor y: (-1)^d e_d(I) = "
                                 "sum_k (H_{I/(y)}(k) - P_{I/(y)}(k)) - sum_k length((I^k : y)/I^{k-1})");
    r.hypotheses.push_back({"y is a non-zero-divisor", HypothesisStatus::NotCertified, seq.failure});
    r.conclusion = ConclusionStatus::Vacuous;
    return r;
  }
  return check_ed_formula(ctx.ring(), ctx.ideal(), seq.elements.front(), ctx.options());
}

/// Postulation/vanishing statements: the unconditional direction plus the
/// consequences of grade gr_q(R)_+ >= d-1.
inline std::vector<TheoremReport> check_vanishing(VerificationContext& ctx) {
  std::vector<TheoremReport> out;
  const auto& f = ctx.fit();
  const long d = static_cast<long>(f.dim);
  const std::int64_t colength = ctx.colength();
  auto e_zero_from = [&](long i) {
    for (long j = i; j <= d; ++j) {
      if (f.e(j) != 0) return false;
    }
    return true;
  };

  {
    TheoremReport r = ctx.report("postulation-vanishing", "n(q) < i-d implies e_j = 0 for all j >= i (0 <= i <= d)");
    r.hypotheses.push_back(ctx.parameter_hypothesis());
    detail::add_fit_witness(r, f);
    ConclusionStatus c = ConclusionStatus::Vacuous;
    for (long i = 0; i <= d; ++i) {
      if (!f.postulation_below(i - d)) continue;
      c = detail::worse(c, e_zero_from(i) ? ConclusionStatus::Holds : ConclusionStatus::Fails);
    }
    r.conclusion = detail::all_certified(r.hypotheses) ? c : ConclusionStatus::Vacuous;
    out.push_back(std::move(r));
  }

  const Hypothesis grade = ctx.grade_hypothesis();
  auto graded_report = [&](std::string id, std::string statement) {
    TheoremReport r = ctx.report(std::move(id), std::move(statement));
    r.hypotheses.push_back(ctx.parameter_hypothesis());
    r.hypotheses.push_back(grade);
    return r;
  };
  auto finish = [&](TheoremReport& r, ConclusionStatus c) {
    r.conclusion = detail::all_certified(r.hypotheses) ? c : ConclusionStatus::Vacuous;
  };

  {
    TheoremReport r = graded_report("postulation-vanishing-converse",
                                    "grade gr_q(R)_+ >= d-1 and e_j = 0 for j >= i imply n(q) < i-d");
    detail::add_fit_witness(r, f);
    ConclusionStatus c = ConclusionStatus::Vacuous;
    for (long i = 0; i <= d; ++i) {
      if (!e_zero_from(i)) continue;
      c = detail::worse(c, f.postulation_below(i - d) ? ConclusionStatus::Holds : ConclusionStatus::Fails);
    }
    finish(r, c);
    out.push_back(std::move(r));
  }
  {
    TheoremReport r = graded_report("defect-stabilization",
                                    "grade gr_q(R)_+ >= d-1 and P(k) = H(k) for some k >= 0 imply P(n) = H(n) for all n >= k");
    std::int64_t lo = 0, hi = f.window_hi;
    std::vector<std::int64_t> defect;
    for (std::int64_t n = lo; n <= hi; ++n) defect.push_back(f.P(n) - f.H(n));
    r.add("n_range", std::vector<std::int64_t>{lo, hi});
    r.add("defect", defect);
    ConclusionStatus c = ConclusionStatus::Holds;
    bool zero_seen = false;
    for (auto v : defect) {
      if (v == 0) zero_seen = true;
      else if (zero_seen) c = ConclusionStatus::Fails;
    }
    finish(r, c);
    out.push_back(std::move(r));
  }
  {
    TheoremReport r = graded_report("nonpositive-coefficients", "grade gr_q(R)_+ >= d-1 implies e_i <= 0 for 1 <= i <= d");
    r.add("e", f.coeffs);
    ConclusionStatus c = d >= 1 ? ConclusionStatus::Holds : ConclusionStatus::Vacuous;
    for (long i = 1; i <= d; ++i) {
      if (f.e(i) > 0) c = ConclusionStatus::Fails;
    }
    finish(r, c);
    out.push_back(std::move(r));
  }
  {
    TheoremReport r = graded_report("alternating-sums",
                                    "grade gr_q(R)_+ >= d-1 implies (-1)^{j+1}(e0 - e1 + ... + (-1)^j e_j - length(R/q)) >= 0");
    r.add("e", f.coeffs);
    r.add("colength", colength);
    std::vector<std::int64_t> values;
    ConclusionStatus c = d >= 1 ? ConclusionStatus::Holds : ConclusionStatus::Vacuous;
    std::int64_t partial = 0;
    for (long j = 0; j <= d; ++j) {
      partial += (j % 2 == 0) ? f.e(j) : -f.e(j);
      if (j == 0) continue;
      std::int64_t v = partial - colength;
      if ((j + 1) % 2) v = -v;
      values.push_back(v);
      if (v < 0) c = ConclusionStatus::Fails;
    }
    r.add("signed_sums", values);
    finish(r, c);
    out.push_back(std::move(r));
  }
  {
    TheoremReport r = graded_report("vanishing-propagation",
                                    "grade gr_q(R)_+ >= d-1 and e_i = 0 (1 <= i <= d-1) imply e_j = 0 for i <= j <= d");
    r.add("e", f.coeffs);
    ConclusionStatus c = ConclusionStatus::Vacuous;
    for (long i = 1; i <= d - 1; ++i) {
      if (f.e(i) != 0) continue;
      c = detail::worse(c, e_zero_from(i) ? ConclusionStatus::Holds : ConclusionStatus::Fails);
    }
    finish(r, c);
    out.push_back(std::move(r));
  }
  return out;
}

/// Every applicable check for (R, q).
inline std::vector<TheoremReport> verify_all(VerificationContext& ctx) {
  std::vector<TheoremReport> out;
  if (ctx.dim() >= 2) {
    out.push_back(check_second_coeff(ctx));
    out.push_back(check_e0_e1_bound(ctx));
  }
  out.push_back(check_delta_signs(ctx));
  if (ctx.dim() >= 1) out.push_back(check_ed_formula(ctx));
  for (auto& r : check_vanishing(ctx)) out.push_back(std::move(r));
  return out;
}

inline TheoremReport check_second_coeff(const QuotientRing& R, const Ideal& q, const VerifyOptions& opt = {}) {
  VerificationContext ctx(R, q, opt);
  return check_second_coeff(ctx);
}

inline TheoremReport check_e0_e1_bound(const QuotientRing& R, const Ideal& q, const VerifyOptions& opt = {}) {
  VerificationContext ctx(R, q, opt);
  return check_e0_e1_bound(ctx);
}

inline TheoremReport check_delta_signs(const QuotientRing& R, const Ideal& q, std::int64_t n_lo, std::int64_t n_hi,
                                       const VerifyOptions& opt = {}) {
  VerificationContext ctx(R, q, opt);
  return check_delta_signs(ctx, n_lo, n_hi);
}

inline std::vector<TheoremReport> check_vanishing(const QuotientRing& R, const Ideal& q, const VerifyOptions& opt = {}) {
  VerificationContext ctx(R, q, opt);
  return check_vanishing(ctx);
}

inline std::vector<TheoremReport> verify_all(const QuotientRing& R, const Ideal& q, const VerifyOptions& opt = {}) {
  VerificationContext ctx(R, q, opt);
  return verify_all(ctx);
}

}  // namespace hk
