#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hk/hilbert.hpp"
#include "hk/reduction.hpp"

namespace hk {

/// A generated ring with a parameter ideal, reproducible from `seed`.
struct RingSample {
  QuotientRing ring;
  Ideal q;
  std::uint64_t seed = 0;
  std::string family;
};

struct GeneratorConfig {
  std::size_t min_vars = 3;
  std::size_t max_vars = 5;
  std::size_t min_dim = 2;
  std::size_t max_dim = 3;
  std::uint32_t characteristic = 32003;
  int attempts = 40;
};

namespace detail {

inline std::vector<std::string> default_names(std::size_t n) {
  static const char* letters[] = {"x", "y", "z", "u", "v", "w", "s", "t", "a", "b", "c", "e", "f", "g", "h", "k"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(letters[i]);
  return out;
}

/// Coefficient in {-3..3} \ {0}.
inline std::int64_t small_coeff(SeededRng& rng) {
  std::int64_t c = static_cast<std::int64_t>(rng.below(6)) - 3;
  return c >= 0 ? c + 1 : c;
}

/// Sparse linear form in 2-3 variables with small coefficients.
inline Polynomial random_linear(const RingPtr& S, SeededRng& rng, std::size_t max_terms = 3) {
  const std::size_t n = S->nvars();
  Polynomial f(S);
  const std::size_t terms = std::min<std::size_t>(n, 2 + rng.below(max_terms - 1));
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  for (std::size_t i = 0; i < terms; ++i) {
    std::swap(idx[i], idx[i + rng.below(n - i)]);
    f = f + Polynomial::variable(S, idx[i]).scale(S->field().from_int(small_coeff(rng)));
  }
  return f;
}

/// Monomial of degree in [2, max_deg] in the given variables.
inline Polynomial random_monomial(const RingPtr& S, SeededRng& rng, const std::vector<std::size_t>& vars,
                                  unsigned max_deg = 3) {
  Monomial m(S->nvars());
  const unsigned deg = 2 + static_cast<unsigned>(rng.below(max_deg - 1));
  for (unsigned k = 0; k < deg; ++k) {
    std::size_t v = vars[rng.below(vars.size())];
    m.set(v, m[v] + 1);
  }
  return Polynomial::monomial(S, m);
}

/// d generic-looking linear forms with small coefficients and finite colength.
inline std::optional<Ideal> random_parameter_ideal(const QuotientRing& R, SeededRng& rng, int attempts) {
  const std::size_t d = R.dimension();
  for (int t = 0; t < attempts; ++t) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < d; ++i) gens.push_back(random_linear(R.ambient(), rng, R.nvars() >= 4 ? 4 : 3));
    Ideal q(R, gens);
    if (q.generators().size() != d) continue;
    if (length(q).is_finite()) return q;
  }
  return std::nullopt;
}

/// Component of codimension c: a mix of sparse linear forms and pure powers.
inline std::vector<Polynomial> random_component(const RingPtr& S, SeededRng& rng, std::size_t codim) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < codim; ++i) {
    if (rng.below(4) == 0) {
      std::size_t v = rng.below(S->nvars());
      gens.push_back(Polynomial::variable(S, v).pow(2 + static_cast<unsigned>(rng.below(2))));
    } else {
      gens.push_back(random_linear(S, rng));
    }
  }
  return gens;
}

}  // namespace detail

/// Intersection of 2-3 components of codimension n-d, each generated by
/// linear forms and pure powers.
inline std::optional<RingSample> random_intersection_ring(const GeneratorConfig& cfg, std::uint64_t seed) {
  SeededRng rng(seed);
  for (int t = 0; t < cfg.attempts; ++t) {
    const std::size_t d = cfg.min_dim + rng.below(cfg.max_dim - cfg.min_dim + 1);
    const std::size_t lo = std::max(cfg.min_vars, d + 1);
    if (lo > cfg.max_vars) continue;
    const std::size_t n = lo + rng.below(cfg.max_vars - lo + 1);
    auto S = PolyRing::make(PrimeField(cfg.characteristic), detail::default_names(n));
    QuotientRing A(S);
    const std::size_t comps = 2 + rng.below(2);
    Ideal J(A, detail::random_component(S, rng, n - d));
    for (std::size_t c = 1; c < comps; ++c) J = intersect(J, Ideal(A, detail::random_component(S, rng, n - d)));
    if (J.is_unit()) continue;
    QuotientRing R(S, J.basis().generators());
    if (R.dimension() != d) continue;
    auto q = detail::random_parameter_ideal(R, rng, cfg.attempts);
    if (!q) continue;
    return RingSample{R, *q, seed, "intersection"};
  }
  return std::nullopt;
}

/// Monomial ring of dimension d: pure powers of n-d variables plus mixed
/// monomials not supported on the d free variables alone.
inline std::optional<RingSample> random_monomial_ring(const GeneratorConfig& cfg, std::uint64_t seed) {
  SeededRng rng(seed);
  for (int t = 0; t < cfg.attempts; ++t) {
    const std::size_t d = cfg.min_dim + rng.below(cfg.max_dim - cfg.min_dim + 1);
    const std::size_t lo = std::max(cfg.min_vars, d + 1);
    if (lo > cfg.max_vars) continue;
    const std::size_t n = lo + rng.below(cfg.max_vars - lo + 1);
    auto S = PolyRing::make(PrimeField(cfg.characteristic), detail::default_names(n));
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    for (std::size_t i = 0; i < n; ++i) std::swap(all[i], all[i + rng.below(n - i)]);
    std::vector<std::size_t> bound(all.begin() + static_cast<long>(d), all.end());
    std::vector<Polynomial> gens;
    for (auto v : bound) gens.push_back(Polynomial::variable(S, v).pow(2 + static_cast<unsigned>(rng.below(3))));
    const std::size_t extra = 1 + rng.below(3);
    for (std::size_t k = 0; k < extra; ++k) {
      Polynomial m = detail::random_monomial(S, rng, {all.begin(), all.end()});
      bool touches = false;
      for (auto v : bound) touches = touches || m.leading_monomial()[v] > 0;
      if (touches) gens.push_back(m);
    }
    QuotientRing R(S, gens);
    if (R.dimension() != d) continue;
    auto q = detail::random_parameter_ideal(R, rng, cfg.attempts);
    if (!q) continue;
    return RingSample{R, *q, seed, "monomial"};
  }
  return std::nullopt;
}

/// Alternates between the intersection and monomial families by seed.
inline std::optional<RingSample> random_parameter_pair(const GeneratorConfig& cfg, std::uint64_t seed) {
  if (cfg.min_dim < 1 || cfg.min_dim > cfg.max_dim || cfg.min_vars > cfg.max_vars || cfg.max_vars > kMaxVars) {
    throw std::invalid_argument("inconsistent generator configuration");
  }
  if (SeededRng(seed).below(3) == 0) return random_monomial_ring(cfg, seed);
  return random_intersection_ring(cfg, seed);
}

/// One-dimensional ring in 2-3 variables (monomial or one homogeneous
/// binomial on top of monomials) with a linear parameter x.
inline RingSample random_dim1_pair(std::uint64_t seed, std::uint32_t characteristic = 32003, int attempts = 60) {
  SeededRng rng(seed);
  for (int t = 0; t < attempts; ++t) {
    const std::size_t n = 2 + rng.below(2);
    auto S = PolyRing::make(PrimeField(characteristic), detail::default_names(n));
    const std::size_t free_var = rng.below(n);
    std::vector<std::size_t> all(n), bound;
    for (std::size_t i = 0; i < n; ++i) {
      all[i] = i;
      if (i != free_var) bound.push_back(i);
    }
    std::vector<Polynomial> gens;
    for (auto v : bound) gens.push_back(Polynomial::variable(S, v).pow(2 + static_cast<unsigned>(rng.below(3))));
    const std::size_t extra = rng.below(3);
    for (std::size_t k = 0; k < extra; ++k) {
      Polynomial m = detail::random_monomial(S, rng, all);
      if (m.leading_monomial()[free_var] != m.total_degree()) gens.push_back(m);
    }
    std::string family = "monomial";
    if (n == 3 && rng.below(2) == 0) {
      // x_a x_b - c x_k^2 with a, b, k chosen among all variables
      std::size_t a = rng.below(n), b = rng.below(n), k = bound[rng.below(bound.size())];
      Polynomial bin = Polynomial::variable(S, a) * Polynomial::variable(S, b) -
                       Polynomial::variable(S, k).pow(2).scale(S->field().from_int(detail::small_coeff(rng)));
      if (!bin.is_zero()) {
        gens.push_back(bin);
        family = "binomial";
      }
    }
    QuotientRing R(S, gens);
    if (R.dimension() != 1) continue;
    for (int s = 0; s < attempts; ++s) {
      Polynomial x(S);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == free_var || rng.below(2) == 0) {
          x = x + Polynomial::variable(S, i).scale(S->field().from_int(detail::small_coeff(rng)));
        }
      }
      Ideal q(R, {x});
      if (q.generators().size() == 1 && length(q).is_finite()) return RingSample{R, q, seed, family};
    }
  }
  throw TrialsExhausted("no one-dimensional sample generated for seed " + std::to_string(seed));
}

}  // namespace hk
