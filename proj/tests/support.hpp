#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hk/hilbert.hpp"
#include "hk/ideal.hpp"
#include "hk/reduction.hpp"

namespace hk::testing {

inline RingPtr make_ring(std::vector<std::string> names, std::uint32_t p = 32003) {
  return PolyRing::make(PrimeField(p), std::move(names));
}

inline Polynomial var(const RingPtr& S, const std::string& name) {
  return Polynomial::variable(S, static_cast<std::size_t>(S->index_of(name)));
}

inline Polynomial cst(const RingPtr& S, std::int64_t c) { return Polynomial::constant(S, c); }

/// R = k[x,y,z,u,v,w] modulo the intersection of three linear components.
struct TripleIntersection {
  RingPtr S = make_ring({"x", "y", "z", "u", "v", "w"});
  QuotientRing R;
  Ideal q;
  TripleIntersection() {
    QuotientRing A(S);
    auto x = var(S, "x"), y = var(S, "y"), z = var(S, "z"), u = var(S, "u"), v = var(S, "v"), w = var(S, "w");
    Ideal J = intersect(intersect(Ideal(A, {x + y, z - u, w}), Ideal(A, {z, u - v, y})), Ideal(A, {x, u, w}));
    R = QuotientRing(S, J.basis().generators());
    q = Ideal(R, {u - y, z + w, x - v});
  }
};

/// Binomial presentation of k[x^5, x^4 y, x y^4, y^5] with q = (t1, t4).
struct QuarticCurve {
  RingPtr S = make_ring({"t1", "t2", "t3", "t4"});
  QuotientRing R;
  Ideal q;
  QuarticCurve() {
    auto a = var(S, "t1"), b = var(S, "t2"), c = var(S, "t3"), d = var(S, "t4");
    R = QuotientRing(S, {b * c - a * d, b.pow(4) - c * d.pow(3), a * b.pow(3) - c.pow(2) * d.pow(2),
                         a.pow(2) * b.pow(2) - c.pow(3) * d, a.pow(3) * b - c.pow(4), c.pow(5) - a.pow(4) * d});
    q = Ideal(R, {a, d});
  }
};

/// k[x,y,z,t] / ((x^2, z^4) ∩ (x-y, z+t)) with q = (x+t+y, z-y).
struct EmbeddedLine {
  RingPtr S = make_ring({"x", "y", "z", "t"});
  QuotientRing R;
  Ideal q;
  EmbeddedLine() {
    QuotientRing A(S);
    auto x = var(S, "x"), y = var(S, "y"), z = var(S, "z"), t = var(S, "t");
    Ideal J = intersect(Ideal(A, {x * x, z.pow(4)}), Ideal(A, {x - y, z + t}));
    R = QuotientRing(S, J.basis().generators());
    q = Ideal(R, {x + t + y, z - y});
  }
};

/// All monomials in n variables of total degree exactly d.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  std::vector<unsigned> e(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == n) {
      e[i] = left;
      out.emplace_back(std::span<const unsigned>(e));
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  if (n == 0) return out;
  rec(0, d);
  return out;
}

/// Standard monomials of a monomial ideal counted by enumeration up to
/// `max_degree`; nullopt when some monomial of that degree is standard.
inline std::optional<std::uint64_t> brute_force_colength(const std::vector<Monomial>& lms, std::size_t n,
                                                         unsigned max_degree) {
  std::uint64_t count = 0;
  for (unsigned d = 0; d <= max_degree; ++d) {
    std::uint64_t here = 0;
    for (const auto& m : monomials_of_degree(n, d)) {
      bool standard = true;
      for (const auto& g : lms) {
        if (g.divides(m)) {
          standard = false;
          break;
        }
      }
      if (standard) ++here;
    }
    if (d == max_degree && here) return std::nullopt;
    count += here;
  }
  return count;
}

/// Rank over Z/p of a dense matrix, by Gaussian elimination.
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> rows, std::int64_t p) {
  auto inv = [&](std::int64_t a) {
    std::int64_t r = 1, b = a % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::int64_t iv = inv(((rows[rank][c] % p) + p) % p);
    for (auto& x : rows[rank]) x = ((x % p) + p) % p * iv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] % p == 0) continue;
      const std::int64_t f = ((rows[r][c] % p) + p) % p;
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Membership of a homogeneous f of degree D in the ideal of homogeneous
/// generators, decided by linear algebra in degree D.
inline bool linear_algebra_member(const std::vector<Polynomial>& gens, const Polynomial& f) {
  if (f.is_zero()) return true;
  const auto& S = f.ring();
  const std::size_t n = S->nvars();
  const unsigned D = f.total_degree();
  auto basis = monomials_of_degree(n, D);
  auto column = [&](const Monomial& m) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i] == m) return i;
    }
    throw std::logic_error("monomial outside the degree");
  };
  const std::int64_t p = S->field().characteristic();
  auto row_of = [&](const Polynomial& g) {
    std::vector<std::int64_t> row(basis.size(), 0);
    for (const auto& t : g.terms()) row[column(t.mono)] = t.coeff;
    return row;
  };
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& g : gens) {
    if (g.is_zero() || g.total_degree() > D) continue;
    for (const auto& m : monomials_of_degree(n, D - g.total_degree())) rows.push_back(row_of(g.mul_term(1, m)));
  }
  const std::size_t r = rank_mod_p(rows, p);
  rows.push_back(row_of(f));
  return rank_mod_p(rows, p) == r;
}

}  // namespace hk::testing
