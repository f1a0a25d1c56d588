#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hk/ideal.hpp"
#include "hk/monomial_ideal.hpp"

namespace hk {

/// λ of a module: a non-negative integer or infinity.
class LengthValue {
 public:
  LengthValue() = default;
  explicit LengthValue(std::uint64_t v) : value_(v) {}
  static LengthValue infinite() { return LengthValue(); }

  bool is_finite() const { return value_.has_value(); }
  std::uint64_t value() const {
    if (!value_) throw std::domain_error("length is infinite");
    return *value_;
  }
  std::int64_t as_int() const { return static_cast<std::int64_t>(value()); }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }
  bool operator==(const LengthValue&) const = default;

 private:
  std::optional<std::uint64_t> value_;
};

class NotMPrimary : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// λ(R/I): the number of standard monomials of the leading-term ideal of J + I.
inline LengthValue length(const Ideal& I) {
  const auto& G = I.basis();
  auto c = count_standard_monomials(G.leading_monomials(), I.ring().nvars());
  return c ? LengthValue(*c) : LengthValue::infinite();
}

inline LengthValue length(const QuotientRing& R, const Ideal& I) {
  if (!(I.ring() == R)) throw RingMismatch("ideal does not belong to the ring");
  return length(I);
}

/// λ(big / small) for small ⊆ big, from the difference of Hilbert series of
/// the two leading-term ideals.  Finite exactly when the difference is a
/// polynomial.
inline LengthValue quotient_length(const Ideal& small, const Ideal& big) {
  small.check_ring(big);
  const std::size_t n = small.ring().nvars();
  SeriesNumerator a = hilbert_numerator(small.basis().leading_monomials());
  SeriesNumerator b = hilbert_numerator(big.basis().leading_monomials());
  SeriesNumerator diff = detail::add_shifted(std::move(a), b, 0, -1);
  auto q = divide_by_one_minus_t(std::move(diff), n);
  if (!q) return LengthValue::infinite();
  std::int64_t total = 0;
  for (auto c : *q) total += c;
  if (total < 0) throw std::logic_error("quotient_length: first ideal is not contained in the second");
  return LengthValue(static_cast<std::uint64_t>(total));
}

inline std::size_t krull_dim(const QuotientRing& R) { return R.dimension(); }

/// H(n) = λ(R/I^n), zero for n <= 0.
inline std::int64_t hilbert_function(const QuotientRing& R, const Ideal& I, long n) {
  if (!(I.ring() == R)) throw RingMismatch("ideal does not belong to the ring");
  if (!length(I).is_finite()) throw NotMPrimary("ideal is not m-primary: R/I has infinite length");
  if (n <= 0) return 0;
  return length(power(I, n)).as_int();
}

/// Generalized binomial coefficient C(m, r) for any integer m and r >= 0.
inline std::int64_t binomial(std::int64_t m, long r) {
  if (r < 0) return 0;
  __int128 c = 1;
  for (long k = 1; k <= r; ++k) c = c * (m - k + 1) / k;
  return static_cast<std::int64_t>(c);
}

/// Σ_i (-1)^i e_i C(n+d-i-1, d-i) with d = coeffs.size() - 1.
inline std::int64_t hilbert_polynomial_value(const std::vector<std::int64_t>& coeffs, std::int64_t n) {
  const long d = static_cast<long>(coeffs.size()) - 1;
  std::int64_t v = 0;
  for (long i = 0; i <= d; ++i) {
    std::int64_t term = coeffs[i] * binomial(n + d - i - 1, d - i);
    v += (i % 2 == 0) ? term : -term;
  }
  return v;
}

struct FitOptions {
  int guard = 2;
  int n_max = 40;
};

/// Sampled Hilbert-Samuel function with its exactly fitted polynomial.
struct HilbertData {
  std::size_t dim = 0;
  /// samples[k] = H(k + 1) for k = 0 .. samples.size()-1
  std::vector<std::int64_t> samples;
  /// (e_0, ..., e_d)
  std::vector<std::int64_t> coeffs;
  /// Largest n with H(n) != P(n); unset when none was found at or above
  /// postulation_floor.
  std::optional<std::int64_t> postulation;
  std::int64_t postulation_floor = 0;
  std::int64_t window_lo = 0;
  std::int64_t window_hi = 0;
  int guard = 2;

  std::int64_t e(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }
  std::int64_t sampled_hi() const { return static_cast<std::int64_t>(samples.size()); }

  /// Polynomial value at any integer n.
  std::int64_t P(std::int64_t n) const { return hilbert_polynomial_value(coeffs, n); }

  /// H(n): 0 for n <= 0, the sample when available, P(n) beyond the samples
  /// (where the fit has stabilized).
  std::int64_t H(std::int64_t n) const {
    if (n <= 0) return 0;
    if (n <= sampled_hi()) return samples[static_cast<std::size_t>(n - 1)];
    return P(n);
  }

  /// True when n(q) < bound is established by the data.
  bool postulation_below(std::int64_t bound) const {
    if (postulation) return *postulation < bound;
    return postulation_floor <= bound;
  }

  std::string postulation_string() const {
    if (postulation) return std::to_string(*postulation);
    return "<" + std::to_string(postulation_floor);
  }
};

inline std::int64_t evaluate_P(const HilbertData& data, std::int64_t n) { return data.P(n); }

/// P in the alternating binomial basis, e.g. "3*C(n+2,3)+2*C(n+1,2)+1*C(n,1)+0".
inline std::string binomial_basis_string(const std::vector<std::int64_t>& coeffs) {
  std::ostringstream os;
  const long d = static_cast<long>(coeffs.size()) - 1;
  for (long i = 0; i <= d; ++i) {
    std::int64_t c = (i % 2 == 0) ? coeffs[i] : -coeffs[i];
    if (i > 0 && c >= 0) os << "+";
    if (i == d) {
      os << c;
      break;
    }
    long shift = d - i - 1;
    os << c << "*C(n";
    if (shift > 0) os << "+" << shift;
    os << "," << (d - i) << ")";
  }
  return os.str();
}

/// Samples H(1), H(2), ... until d+2+guard consecutive values lie on one
/// polynomial of degree d, solves exactly for the Hilbert coefficients and
/// locates the postulation number.
inline HilbertData fit_coefficients(const QuotientRing& R, const Ideal& I, const FitOptions& opt = {}) {
  if (!(I.ring() == R)) throw RingMismatch("ideal does not belong to the ring");
  if (!length(I).is_finite()) throw NotMPrimary("ideal is not m-primary: R/I has infinite length");
  if (opt.guard < 0) throw std::invalid_argument("guard must be non-negative");
  HilbertData data;
  data.dim = R.dimension();
  data.guard = opt.guard;
  const long d = static_cast<long>(data.dim);
  const long need = d + 2 + opt.guard;

  auto consistent_tail = [&](long count) {
    // Δ^{d+1} vanishes on the last `count` samples
    std::vector<std::int64_t> v(data.samples.end() - count, data.samples.end());
    for (long k = 0; k <= d; ++k) {
      for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = v[i + 1] - v[i];
      v.pop_back();
    }
    for (auto x : v) {
      if (x != 0) return false;
    }
    return true;
  };

  bool stable = false;
  for (long n = 1; n <= opt.n_max; ++n) {
    std::int64_t h = length(power(I, n)).as_int();
    if (!data.samples.empty() && h < data.samples.back()) {
      throw std::logic_error("Hilbert function decreased at n=" + std::to_string(n));
    }
    data.samples.push_back(h);
    if (n >= need && consistent_tail(need)) {
      stable = true;
      break;
    }
  }
  if (!stable) {
    throw FitError("Hilbert function did not stabilize up to n_max=" + std::to_string(opt.n_max));
  }
  data.window_hi = data.sampled_hi();
  data.window_lo = data.window_hi - need + 1;

  // forward differences at window_lo give P in the basis C(n - a, k)
  std::vector<std::int64_t> diffs;
  {
    std::vector<std::int64_t> v(data.samples.begin() + (data.window_lo - 1),
                                data.samples.begin() + (data.window_lo - 1) + d + 1);
    for (long k = 0; k <= d; ++k) {
      diffs.push_back(v[0]);
      for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = v[i + 1] - v[i];
      if (!v.empty()) v.pop_back();
    }
  }
  const std::int64_t a = data.window_lo;
  auto newton = [&](std::int64_t n) {
    std::int64_t s = 0;
    for (long k = 0; k <= d; ++k) s += diffs[k] * binomial(n - a, k);
    return s;
  };
  // peel off (-1)^i e_i C(n+d-i-1, d-i) from the top degree down; the
  // (d-i)-th difference of the remainder is constant and equals (-1)^i e_i
  data.coeffs.assign(d + 1, 0);
  for (long i = 0; i <= d; ++i) {
    const long k = d - i;
    std::int64_t c = 0;
    // k-th difference at a of newton(n) - Σ_{j<i} (-1)^j e_j C(n+d-j-1, d-j)
    for (long s = 0; s <= k; ++s) {
      std::int64_t n = a + s;
      std::int64_t val = newton(n);
      for (long j = 0; j < i; ++j) {
        std::int64_t t = data.coeffs[j] * binomial(n + d - j - 1, d - j);
        val -= (j % 2 == 0) ? t : -t;
      }
      std::int64_t w = binomial(k, s);
      c += ((k - s) % 2 == 0) ? w * val : -w * val;
    }
    data.coeffs[i] = (i % 2 == 0) ? c : -c;
  }
  for (std::int64_t n = data.window_lo; n <= data.window_hi; ++n) {
    if (data.P(n) != data.H(n)) throw std::logic_error("Hilbert polynomial fit is inconsistent");
  }
  if (d >= 0 && data.coeffs[0] <= 0) throw std::logic_error("fitted multiplicity is not positive");

  data.postulation_floor = 2 - d - opt.guard;
  for (std::int64_t n = data.window_lo - 1; n >= data.postulation_floor; --n) {
    if (data.P(n) != data.H(n)) {
      data.postulation = n;
      break;
    }
  }
  return data;
}

}  // namespace hk
