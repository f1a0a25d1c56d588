#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hk/hilbert.hpp"
#include "hk/ideal.hpp"

namespace hk {

/// splitmix64: small, fully specified generator so seeded runs are identical
/// across platforms and standard libraries.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

  PrimeField::Element nonzero(const PrimeField& F) {
    return static_cast<PrimeField::Element>(1 + below(F.characteristic() - 1));
  }

  /// Independent stream for (seed, a, b).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    SeededRng r(seed ^ (a * 0xD1B54A32D192ED03ull) ^ (b * 0x8CB92BA72F3D8DD7ull));
    r.next();
    return r.next();
  }

 private:
  std::uint64_t state_;
};

class TrialsExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Random combination Σ c_i g_i of the generators of q with nonzero field
/// coefficients, rejected while it lies in `avoid`.
inline Polynomial random_in_ideal(const Ideal& q, const Ideal& avoid, std::uint64_t seed, int trials = 8) {
  q.check_ring(avoid);
  if (q.generators().empty()) throw std::invalid_argument("random element of the zero ideal");
  const auto& F = q.ring().field();
  for (int t = 0; t < trials; ++t) {
    SeededRng rng(SeededRng::derive(seed, static_cast<std::uint64_t>(t)));
    Polynomial y(q.ring().ambient());
    for (const auto& g : q.generators()) y = y + g.scale(rng.nonzero(F));
    if (!avoid.contains(y)) return y;
  }
  throw TrialsExhausted("no random element of the ideal avoided the excluded ideal after " +
                        std::to_string(trials) + " trials");
}

/// (0 : y) = 0 in R, tested as (J : y) = J in the ambient ring.
inline bool is_nzd(const QuotientRing& R, const Polynomial& y) {
  if (R.is_zero(y)) throw std::domain_error("is_nzd: element is zero in the ring");
  Ideal zero = Ideal::zero(R);
  return colon(zero, y).is_zero();
}

/// λ((0 :_R y)).
inline LengthValue annihilator_length(const QuotientRing& R, const Polynomial& y) {
  Ideal zero = Ideal::zero(R);
  if (R.is_zero(y)) return LengthValue::infinite();
  return quotient_length(zero, colon(zero, y));
}

struct SuperficialCertificate {
  Polynomial y;
  LengthValue annihilator_length;
  /// P_{I/(y)}(n) - P_I(n) + P_I(n-1) - λ(0:y) for n = 1 .. window end
  std::vector<std::int64_t> nagata_residuals;
  /// e_i(I/(y)) - e_i(I) for i <= d-2, then the corrected e_{d-1} residual
  std::vector<std::int64_t> coefficient_residuals;
  HilbertData fit;
  HilbertData reduced_fit;
  bool verdict = false;
};

/// Checks the Nagata identity P_{Ī}(n) = P_I(n) - P_I(n-1) + λ(0:y) for
/// Ī = I R/(y), across enough points to pin both polynomials.
inline SuperficialCertificate superficial_certificate(const QuotientRing& R, const Ideal& I, const Polynomial& y,
                                                      const FitOptions& opt = {}) {
  if (!(I.ring() == R)) throw RingMismatch("ideal does not belong to the ring");
  Polynomial yy = y.in_ring(R.ambient());
  if (!I.contains(yy)) throw std::invalid_argument("superficial_certificate: element is not in the ideal");
  SuperficialCertificate cert;
  cert.y = yy;
  cert.fit = fit_coefficients(R, I, opt);
  cert.annihilator_length = annihilator_length(R, yy);
  if (!cert.annihilator_length.is_finite()) return cert;

  QuotientRing Rbar = R.quotient_by({yy});
  Ideal Ibar(Rbar, I.generators());
  cert.reduced_fit = fit_coefficients(Rbar, Ibar, opt);

  const std::int64_t lam = cert.annihilator_length.as_int();
  const std::int64_t hi = std::max<std::int64_t>(
      {cert.fit.window_hi, cert.reduced_fit.window_hi, static_cast<std::int64_t>(cert.fit.dim) + 2});
  bool ok = true;
  for (std::int64_t n = 1; n <= hi; ++n) {
    std::int64_t r = cert.reduced_fit.P(n) - cert.fit.P(n) + cert.fit.P(n - 1) - lam;
    cert.nagata_residuals.push_back(r);
    ok = ok && r == 0;
  }
  const long d = static_cast<long>(cert.fit.dim);
  if (d >= 1 && cert.reduced_fit.dim == static_cast<std::size_t>(d - 1)) {
    for (long i = 0; i <= d - 1; ++i) {
      std::int64_t expected = cert.fit.e(i);
      if (i == d - 1) expected += ((d - 1) % 2 == 0 ? lam : -lam);
      std::int64_t r = cert.reduced_fit.e(i) - expected;
      cert.coefficient_residuals.push_back(r);
      ok = ok && r == 0;
    }
  } else {
    ok = false;
  }
  cert.verdict = ok;
  return cert;
}

struct SuperficialSequence {
  std::vector<Polynomial> elements;
  std::uint64_t seed = 0;
  bool ok = false;
  /// 0-based stage that ran out of trials (when !ok)
  int failed_stage = -1;
  std::string failure;
};

/// y_1..y_k from q \ m q, each certified superficial for the image of q in
/// R/(y_1..y_{i}) and, with require_nzd, a non-zero-divisor there.
inline SuperficialSequence find_superficial_sequence(const QuotientRing& R, const Ideal& q, std::size_t k,
                                                     bool require_nzd, std::uint64_t seed, int trials = 8,
                                                     const FitOptions& opt = {}) {
  if (k > R.dimension()) throw std::invalid_argument("sequence longer than the dimension");
  SuperficialSequence out;
  out.seed = seed;
  QuotientRing cur = R;
  for (std::size_t stage = 0; stage < k; ++stage) {
    Ideal qc(cur, q.generators());
    Ideal avoid = Ideal::maximal(cur) * qc;
    bool found = false;
    for (int t = 0; t < trials && !found; ++t) {
      Polynomial y;
      try {
        y = random_in_ideal(qc, avoid, SeededRng::derive(seed, stage, static_cast<std::uint64_t>(t)), 1);
      } catch (const TrialsExhausted&) {
        continue;
      }
      if (cur.is_zero(y)) continue;
      if (require_nzd && !is_nzd(cur, y)) continue;
      if (!superficial_certificate(cur, qc, y, opt).verdict) continue;
      out.elements.push_back(y);
      cur = cur.quotient_by({y});
      found = true;
    }
    if (!found) {
      out.failed_stage = static_cast<int>(stage);
      out.failure = "stage " + std::to_string(stage + 1) + ": no " +
                    (require_nzd ? std::string("superficial non-zero-divisor") : std::string("superficial element")) +
                    " found in " + std::to_string(trials) + " trials";
      return out;
    }
  }
  out.ok = true;
  return out;
}

struct DepthEstimate {
  std::size_t lower_bound = 0;
  std::vector<Polynomial> sequence;
  /// true when the final quotient has a nonzero socle element
  bool exact = false;
  int trials_used = 0;
  std::uint64_t seed = 0;
  std::optional<Polynomial> socle_witness;
};

/// Greedy regular sequence of random linear forms; stops at the first
/// quotient with nonzero socle (0 : m).
inline DepthEstimate depth_estimate(const QuotientRing& R, int trials = 8, std::uint64_t seed = 0) {
  DepthEstimate out;
  out.seed = seed;
  QuotientRing cur = R;
  const auto& F = R.field();
  for (std::size_t stage = 0;; ++stage) {
    if (Ideal::maximal(cur).is_zero()) {
      // cur is the residue field; 1 spans the socle
      out.exact = true;
      out.socle_witness = cur.constant(1);
      return out;
    }
    Ideal socle = colon(Ideal::zero(cur), Ideal::maximal(cur));
    for (const auto& g : socle.generators()) {
      if (!cur.is_zero(g)) {
        out.exact = true;
        out.socle_witness = cur.defining_basis().normal_form(g);
        return out;
      }
    }
    bool found = false;
    for (int t = 0; t < trials && !found; ++t) {
      ++out.trials_used;
      SeededRng rng(SeededRng::derive(seed, stage, static_cast<std::uint64_t>(t)));
      Polynomial y(cur.ambient());
      for (std::size_t i = 0; i < cur.nvars(); ++i) y = y + cur.variable(i).scale(rng.nonzero(F));
      if (cur.is_zero(y) || !is_nzd(cur, y)) continue;
      out.sequence.push_back(y);
      ++out.lower_bound;
      cur = cur.quotient_by({y});
      found = true;
    }
    if (!found) return out;
  }
}

struct GradeCertificate {
  bool certified = false;
  std::size_t k = 0;
  long check_bound = 0;
  std::vector<Polynomial> sequence;
  std::uint64_t seed = 0;
  int failed_stage = -1;
};

/// Default bound K = max(n(q) + d + 2, 6) from a fit of q.
inline long default_grade_bound(const HilbertData& data) {
  std::int64_t post = data.postulation ? *data.postulation : data.postulation_floor;
  return static_cast<long>(std::max<std::int64_t>(post + static_cast<std::int64_t>(data.dim) + 2, 6));
}

/// Seeks y_1..y_k in q \ m q with (q^j : y_{i+1}) = q^{j-1} in R/(y_1..y_i)
/// for 1 <= j <= K, certifying grade gr_q(R)_+ >= k up to the bound K.
inline GradeCertificate grade_gr_lower_bound(const QuotientRing& R, const Ideal& q, std::size_t k,
                                             std::optional<long> K = std::nullopt, std::uint64_t seed = 0,
                                             int trials = 8) {
  GradeCertificate out;
  out.k = k;
  out.seed = seed;
  out.check_bound = K ? *K : default_grade_bound(fit_coefficients(R, q));
  QuotientRing cur = R;
  for (std::size_t stage = 0; stage < k; ++stage) {
    Ideal qc(cur, q.generators());
    Ideal avoid = Ideal::maximal(cur) * qc;
    std::vector<Ideal> powers;
    for (long j = 0; j <= out.check_bound; ++j) powers.push_back(power(qc, j));
    bool found = false;
    for (int t = 0; t < trials && !found; ++t) {
      Polynomial y;
      try {
        y = random_in_ideal(qc, avoid, SeededRng::derive(seed, stage, static_cast<std::uint64_t>(t)), 1);
      } catch (const TrialsExhausted&) {
        continue;
      }
      if (cur.is_zero(y)) continue;
      bool ok = true;
      for (long j = 2; j <= out.check_bound && ok; ++j) {
        ok = ideal_equal(colon(powers[j], y), powers[j - 1]);
      }
      if (!ok) continue;
      out.sequence.push_back(y);
      cur = cur.quotient_by({y});
      found = true;
    }
    if (!found) {
      out.failed_stage = static_cast<int>(stage);
      return out;
    }
  }
  out.certified = true;
  return out;
}

}  // namespace hk
