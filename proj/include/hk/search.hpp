#pragma once

#include <cstdint>
#include <vector>

#include "hk/random_rings.hpp"
#include "hk/verifier.hpp"

namespace hk {

struct SearchConfig {
  GeneratorConfig generator;
  std::uint64_t seed = 0;
  VerifyOptions verify;
};

/// Tests the converse of the postulation-vanishing statement on random
/// pairs: e_j = 0 for all j >= i should force n(q) < i-d.  Pairs already
/// covered by a grade certificate are logged as vacuous.
inline TheoremReport converse_report(const RingSample& s, const VerifyOptions& opt) {
  VerificationContext ctx(s.ring, s.q, opt);
  TheoremReport r = ctx.report("converse-question", "e_j = 0 for all j >= i implies n(q) < i-d (no depth hypothesis)");
  r.seed = s.seed;
  r.hypotheses.push_back(ctx.parameter_hypothesis());
  const auto& f = ctx.fit();
  const long d = static_cast<long>(f.dim);
  detail::add_fit_witness(r, f);
  r.add("family", s.family);
  r.add("dim", static_cast<std::int64_t>(d));

  ConclusionStatus c = ConclusionStatus::Vacuous;
  std::int64_t smallest = -1;
  for (long i = 0; i <= d; ++i) {
    bool zero = true;
    for (long j = i; j <= d; ++j) zero = zero && f.e(j) == 0;
    if (!zero) continue;
    if (smallest < 0) smallest = i;
    c = detail::worse(c, f.postulation_below(i - d) ? ConclusionStatus::Holds : ConclusionStatus::Fails);
  }
  r.add("vanishing_from", smallest);
  if (smallest >= 0) {
    const bool graded = ctx.grade().certified;
    r.add("grade_certified", graded);
    if (graded) c = ConclusionStatus::Vacuous;
  }
  r.conclusion = detail::all_certified(r.hypotheses) ? c : ConclusionStatus::Vacuous;
  return r;
}

/// `budget` generated pairs, one report each, in seed order.  Generator
/// misses are skipped.
inline std::vector<TheoremReport> search_counterexample(const SearchConfig& cfg, std::size_t budget) {
  std::vector<TheoremReport> out;
  for (std::size_t b = 0; b < budget; ++b) {
    const std::uint64_t seed = SeededRng::derive(cfg.seed, 0x5EA3C4, b);
    auto sample = random_parameter_pair(cfg.generator, seed);
    if (!sample) continue;
    VerifyOptions opt = cfg.verify;
    opt.seed = seed;
    out.push_back(converse_report(*sample, opt));
  }
  return out;
}

}  // namespace hk
