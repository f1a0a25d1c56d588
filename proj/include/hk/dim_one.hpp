#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hk/hilbert.hpp"
#include "hk/ideal.hpp"

namespace hk {

/// The ascending chain C_i = ((x^{i+1}) : x^i) of a parameter x in a
/// one-dimensional ring, with stabilization index l and limit x_tilde = C_l.
struct ColonChain {
  QuotientRing ring;
  Polynomial x;
  std::vector<Ideal> chain;
  /// lengths[i] = λ(R / C_i)
  std::vector<std::int64_t> lengths;
  std::size_t l = 0;
  Ideal x_tilde;
  int guard = 2;

  std::int64_t e0() const { return lengths[l]; }

  /// λ(R/C_i), equal to e0 for every i >= l.
  std::int64_t length_at(std::size_t i) const { return i < lengths.size() ? lengths[i] : e0(); }
};

/// Computes C_0, C_1, ... until g+1 consecutive equalities are seen, then
/// checks λ(R/x_tilde) against ΔH(n) = λ(R/(x^{n+1})) - λ(R/(x^n)) just
/// past the chain.
inline ColonChain build_colon_chain(const QuotientRing& R, const Polynomial& x, int guard = 2,
                                    int max_steps = 40) {
  if (R.dimension() != 1) {
    throw std::invalid_argument("colon chain needs a one-dimensional ring (dimension is " +
                                std::to_string(R.dimension()) + ")");
  }
  if (guard < 0) throw std::invalid_argument("guard must be non-negative");
  Polynomial xx = x.in_ring(R.ambient());
  Ideal principal(R, {xx});
  if (!length(principal).is_finite()) throw NotMPrimary("element is not a parameter: R/(x) has infinite length");

  ColonChain c{R, xx, {}, {}, 0, Ideal(), guard};
  Polynomial xi = R.constant(1);  // x^i
  int run = 0;                    // consecutive equalities at the end of the chain
  for (int i = 0; i <= max_steps; ++i) {
    Polynomial next = xi * xx;
    Ideal Ci = colon(Ideal(R, {next}), xi);
    c.lengths.push_back(length(Ci).as_int());
    c.chain.push_back(std::move(Ci));
    xi = std::move(next);
    if (i > 0) {
      const auto& prev = c.chain[i - 1];
      if (!is_subset(prev, c.chain[i])) throw std::logic_error("colon chain is not ascending");
      run = ideal_equal(prev, c.chain[i]) ? run + 1 : 0;
      if (run >= guard + 1) {
        c.l = static_cast<std::size_t>(i - run);
        c.x_tilde = c.chain[c.l];
        // ΔH at n = i+1 must equal λ(R/x_tilde)
        std::int64_t h1 = length(Ideal(R, {xx.pow(static_cast<unsigned>(i + 1))})).as_int();
        std::int64_t h2 = length(Ideal(R, {xx.pow(static_cast<unsigned>(i + 2))})).as_int();
        if (h2 - h1 != c.e0()) {
          throw std::logic_error("colon chain stabilized early: ΔH=" + std::to_string(h2 - h1) +
                                 " but λ(R/x~)=" + std::to_string(c.e0()));
        }
        return c;
      }
    }
  }
  throw FitError("colon chain did not stabilize within " + std::to_string(max_steps) + " steps");
}

struct Dim1Coefficients {
  std::int64_t e0 = 0;
  std::int64_t e1 = 0;
  bool operator==(const Dim1Coefficients&) const = default;
};

/// e0 = λ(R/x_tilde), e1 = Σ_{i<l} (e0 - λ(R/C_i)).
inline Dim1Coefficients dim1_coefficients(const ColonChain& c) {
  Dim1Coefficients out{c.e0(), 0};
  for (std::size_t i = 0; i < c.l; ++i) out.e1 += out.e0 - c.lengths[i];
  return out;
}

/// P(n) - H(n) = Σ_{i>=n} (λ(R/C_i) - e0); the terms vanish from l on.
inline std::int64_t dim1_defect(const ColonChain& c, long n) {
  if (n < 0) throw std::invalid_argument("defect is defined for n >= 0");
  std::int64_t s = 0;
  for (std::size_t i = static_cast<std::size_t>(n); i < c.l; ++i) s += c.lengths[i] - c.e0();
  return s;
}

/// n(q) = l - 1.
inline std::int64_t dim1_postulation(const ColonChain& c) { return static_cast<std::int64_t>(c.l) - 1; }

/// (Δ²(P-H)(n) from defects, λ(R/C_n) - λ(R/C_{n+1})).
inline std::pair<std::int64_t, std::int64_t> delta2_identity_check(const ColonChain& c, long n) {
  if (n < 0) throw std::invalid_argument("delta2 identity is checked for n >= 0");
  std::int64_t lhs = dim1_defect(c, n + 2) - 2 * dim1_defect(c, n + 1) + dim1_defect(c, n);
  auto i = static_cast<std::size_t>(n);
  std::int64_t rhs = c.length_at(i) - c.length_at(i + 1);
  return {lhs, rhs};
}

}  // namespace hk
