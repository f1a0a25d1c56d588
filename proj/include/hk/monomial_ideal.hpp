#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hk/monomial.hpp"

namespace hk {

/// Integer polynomial in one variable t, coefficient of t^i at index i.
using SeriesNumerator = std::vector<std::int64_t>;

namespace detail {

inline void trim(SeriesNumerator& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline SeriesNumerator add_shifted(SeriesNumerator a, const SeriesNumerator& b, std::size_t shift,
                                   std::int64_t sign) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += sign * b[i];
  trim(a);
  return a;
}

/// Drops generators divisible by another generator; sorts by degree.
inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.nvars(); ++i) {
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) {
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

inline SeriesNumerator numerator_rec(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  bool coprime = true;
  std::uint32_t seen = 0;
  for (const auto& g : gens) {
    if (seen & g.support_mask()) {
      coprime = false;
      break;
    }
    seen |= g.support_mask();
  }
  if (coprime) {
    SeriesNumerator p{1};
    for (const auto& g : gens) p = add_shifted(p, p, g.degree(), -1);
    return p;
  }
  // pivot on the variable shared by the most non-trivial generators
  const std::size_t n = gens.front().nvars();
  std::vector<int> count(n, 0);
  for (const auto& g : gens) {
    if (std::popcount(g.support_mask()) < 2) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i]) ++count[i];
    }
  }
  std::size_t var = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  std::vector<unsigned> exps;
  for (const auto& g : gens) {
    if (g[var] && std::popcount(g.support_mask()) >= 2) exps.push_back(g[var]);
  }
  std::nth_element(exps.begin(), exps.begin() + exps.size() / 2, exps.end());
  unsigned e = exps[exps.size() / 2];
  Monomial pivot = Monomial::variable(n, var, e);

  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(Monomial::colon(g, pivot));

  SeriesNumerator a = numerator_rec(std::move(with_pivot));
  SeriesNumerator b = numerator_rec(std::move(colon));
  return add_shifted(std::move(a), b, e, 1);
}

}  // namespace detail

/// K-polynomial of S/M for a monomial ideal M in `nvars` variables: the
/// Hilbert series of S/M equals numerator / (1-t)^nvars.
inline SeriesNumerator hilbert_numerator(const std::vector<Monomial>& gens) {
  return detail::numerator_rec(gens);
}

/// Divides p by (1-t) exactly `times` times.  Returns nullopt when a division
/// leaves a remainder.
inline std::optional<SeriesNumerator> divide_by_one_minus_t(SeriesNumerator p, std::size_t times) {
  for (std::size_t k = 0; k < times; ++k) {
    detail::trim(p);
    if (p.empty()) return SeriesNumerator{};
    // p = (1-t) q  <=>  q_i = sum_{j<=i} p_j, with sum of all p_j = 0
    SeriesNumerator q(p.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      acc += p[i];
      q[i] = acc;
    }
    if (acc + p.back() != 0) return std::nullopt;
    p = std::move(q);
  }
  detail::trim(p);
  return p;
}

/// Krull dimension of S/M: largest set of variables containing the support of
/// no generator.
inline std::size_t monomial_dimension(const std::vector<Monomial>& gens, std::size_t nvars) {
  if (nvars >= 31) throw std::invalid_argument("too many variables for subset enumeration");
  std::vector<std::uint32_t> masks;
  for (const auto& g : gens) masks.push_back(g.support_mask());
  std::size_t best = 0;
  const std::uint32_t full = (1u << nvars);
  bool unit = std::any_of(gens.begin(), gens.end(), [](const Monomial& g) { return g.is_one(); });
  if (unit) return 0;
  for (std::uint32_t s = 0; s < full; ++s) {
    std::size_t size = static_cast<std::size_t>(std::popcount(s));
    if (size <= best) continue;
    bool independent = true;
    for (auto m : masks) {
      if ((m & ~s) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

/// Number of monomials outside M, or nullopt when infinite.
inline std::optional<std::uint64_t> count_standard_monomials(const std::vector<Monomial>& gens,
                                                             std::size_t nvars) {
  auto q = divide_by_one_minus_t(hilbert_numerator(gens), nvars);
  if (!q) return std::nullopt;
  std::int64_t total = 0;
  for (auto c : *q) total += c;
  return static_cast<std::uint64_t>(total);
}

/// Number of degree-k monomials outside M.
inline std::int64_t graded_count(const std::vector<Monomial>& gens, std::size_t nvars, std::int64_t k) {
  if (k < 0) return 0;
  SeriesNumerator num = hilbert_numerator(gens);
  // coefficient of t^k in num / (1-t)^n = sum_i num_i * C(k - i + n - 1, n - 1)
  std::int64_t total = 0;
  for (std::size_t i = 0; i < num.size(); ++i) {
    std::int64_t m = k - static_cast<std::int64_t>(i);
    if (m < 0) break;
    if (nvars == 0) {
      total += m == 0 ? num[i] : 0;
      continue;
    }
    std::int64_t c = 1;
    for (std::size_t r = 1; r < nvars; ++r) c = c * (m + static_cast<std::int64_t>(r)) / static_cast<std::int64_t>(r);
    total += num[i] * c;
  }
  return total;
}

}  // namespace hk
