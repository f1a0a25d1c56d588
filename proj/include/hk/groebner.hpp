#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "hk/polynomial.hpp"

namespace hk {

namespace detail {

/// Leading-monomial lookup table over a list of monic polynomials.
class Reducers {
 public:
  Reducers() = default;
  explicit Reducers(const std::vector<Polynomial>& polys) {
    for (const auto& p : polys) add(&p);
  }

  void add(const Polynomial* p) {
    polys_.push_back(p);
    lms_.push_back(p->leading_monomial());
  }
  void clear() {
    polys_.clear();
    lms_.clear();
  }
  bool empty() const { return polys_.empty(); }

  const Polynomial* find(const Monomial& m) const {
    const std::uint32_t mask = m.support_mask();
    for (std::size_t i = 0; i < lms_.size(); ++i) {
      if ((lms_[i].support_mask() & ~mask) == 0 && lms_[i].divides(m)) return polys_[i];
    }
    return nullptr;
  }

 private:
  std::vector<const Polynomial*> polys_;
  std::vector<Monomial> lms_;
};

/// Reduces f by monic reducers.  With `full`, every term is reduced; otherwise
/// reduction stops at the first irreducible leading term.
inline Polynomial reduce(const Polynomial& f, const Reducers& reducers, bool full) {
  if (f.is_zero() || reducers.empty()) return f;
  const auto& field = f.field();
  const auto& ord = f.ring()->order();
  std::vector<Term> rem;
  std::vector<Term> cur = f.terms();
  std::vector<Term> next;
  std::size_t off = 0;
  while (off < cur.size()) {
    const Term t = cur[off];
    const Polynomial* g = reducers.find(t.mono);
    if (!g) {
      rem.push_back(t);
      ++off;
      if (!full) {
        rem.insert(rem.end(), cur.begin() + off, cur.end());
        off = cur.size();
      }
      continue;
    }
    // cur[off+1..] - t.coeff * (t.mono / lm g) * tail(g)
    const Monomial m = t.mono / g->leading_monomial();
    const auto negc = field.neg(t.coeff);
    const auto& gt = g->terms();
    next.clear();
    next.reserve(cur.size() - off + gt.size());
    std::size_t i = off + 1, j = 1;
    Term h{};
    bool have = false;
    auto advance = [&]() {
      if (j < gt.size()) {
        h = {field.mul(gt[j].coeff, negc), gt[j].mono * m};
        ++j;
        have = true;
      } else {
        have = false;
      }
    };
    advance();
    while (i < cur.size() && have) {
      int c = ord.compare(cur[i].mono, h.mono);
      if (c > 0) {
        next.push_back(cur[i++]);
      } else if (c < 0) {
        next.push_back(h);
        advance();
      } else {
        auto s = field.add(cur[i].coeff, h.coeff);
        if (s) next.push_back({s, h.mono});
        ++i;
        advance();
      }
    }
    while (i < cur.size()) next.push_back(cur[i++]);
    while (have) {
      next.push_back(h);
      advance();
    }
    cur.swap(next);
    off = 0;
  }
  return Polynomial::from_terms(f.ring(), std::move(rem));
}

}  // namespace detail

/// Reduced Groebner basis: monic generators with pairwise non-dividing leading
/// monomials, fully interreduced, sorted by descending leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_->order(); }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const std::vector<Monomial>& leading_monomials() const { return lms_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero_ideal() const { return gens_.empty(); }
  bool is_unit_ideal() const { return gens_.size() == 1 && gens_[0].is_constant(); }

  Polynomial normal_form(const Polynomial& f) const {
    check(f);
    return detail::reduce(f.in_ring(ring_), reducers_, true);
  }

  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  /// Buchberger's criterion: every S-polynomial reduces to zero.
  bool verify() const {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      for (std::size_t j = i + 1; j < gens_.size(); ++j) {
        if (!normal_form(s_polynomial(gens_[i], gens_[j])).is_zero()) return false;
      }
    }
    return true;
  }

  bool operator==(const GroebnerBasis& o) const {
    return same_ring(ring_, o.ring_) && gens_ == o.gens_;
  }

  static Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    const auto& F = f.field();
    Polynomial a = f.mul_term(F.inv(f.leading_coefficient()), l / f.leading_monomial());
    return a.sub_mul_term(F.inv(g.leading_coefficient()), l / g.leading_monomial(), g);
  }

 private:
  friend GroebnerBasis buchberger(std::vector<Polynomial> gens, const MonomialOrder& ord);

  void check(const Polynomial& f) const {
    if (!f.ring() || f.ring()->nvars() != ring_->nvars() || !(f.field() == ring_->field())) {
      throw RingMismatch("polynomial and Groebner basis live in different rings");
    }
  }

  void index() {
    lms_.clear();
    reducers_.clear();
    for (const auto& g : gens_) {
      lms_.push_back(g.leading_monomial());
      reducers_.add(&g);
    }
  }

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::vector<Monomial> lms_;
  detail::Reducers reducers_;

 public:
  GroebnerBasis(const GroebnerBasis& o) : ring_(o.ring_), gens_(o.gens_) { index(); }
  GroebnerBasis& operator=(const GroebnerBasis& o) {
    if (this != &o) {
      ring_ = o.ring_;
      gens_ = o.gens_;
      index();
    }
    return *this;
  }
  GroebnerBasis(GroebnerBasis&& o) noexcept = default;
  GroebnerBasis& operator=(GroebnerBasis&& o) noexcept = default;
};

namespace detail {

struct CriticalPair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t sugar;
};

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by `gens` under `ord`.
/// Pairs are processed by lowest sugar degree, ties broken by the lcm under
/// the order and then by index, so results are reproducible.  Gebauer-Moeller
/// installation discards pairs by the coprime and chain criteria.
inline GroebnerBasis buchberger(std::vector<Polynomial> gens, const MonomialOrder& ord) {
  GroebnerBasis out;
  RingPtr base;
  for (const auto& g : gens) {
    if (!g.ring()) continue;
    if (!base) base = g.ring();
    else if (base->nvars() != g.ring()->nvars() || !(base->field() == g.ring()->field()) ||
             base->names() != g.ring()->names()) {
      throw RingMismatch("generators from different rings");
    }
  }
  if (!base) return out;
  RingPtr ring = base->order() == ord ? base : base->with_order(ord);
  out.ring_ = ring;

  std::vector<Polynomial> G;       // every basis element ever installed
  std::vector<std::uint32_t> sugar;
  std::vector<bool> active;
  std::vector<detail::CriticalPair> pairs;
  detail::Reducers reducers;

  auto rebuild_reducers = [&]() {
    reducers.clear();
    for (std::size_t k = 0; k < G.size(); ++k) {
      if (active[k]) reducers.add(&G[k]);
    }
  };

  auto install = [&](Polynomial h, std::uint32_t s) {
    const std::size_t hi = G.size();
    G.push_back(std::move(h));
    sugar.push_back(s);
    active.push_back(true);
    const Monomial lh = G[hi].leading_monomial();

    // chain criterion among the new pairs
    std::vector<std::size_t> cand;
    for (std::size_t k = 0; k < hi; ++k) {
      if (active[k]) cand.push_back(k);
    }
    std::vector<Monomial> lcms;
    for (auto k : cand) lcms.push_back(Monomial::lcm(lh, G[k].leading_monomial()));
    std::vector<bool> keep(cand.size(), true);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (lh.coprime(G[cand[a]].leading_monomial())) continue;
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (lcms[b].divides(lcms[a]) && (!(lcms[b] == lcms[a]) || b < a)) {
          keep[a] = false;
          break;
        }
      }
    }
    // old pairs made redundant by h
    std::vector<detail::CriticalPair> kept;
    kept.reserve(pairs.size());
    for (auto& p : pairs) {
      if (lh.divides(p.lcm)) {
        Monomial l1 = Monomial::lcm(G[p.i].leading_monomial(), lh);
        Monomial l2 = Monomial::lcm(G[p.j].leading_monomial(), lh);
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) continue;
      }
      kept.push_back(std::move(p));
    }
    pairs.swap(kept);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!keep[a]) continue;
      const std::size_t k = cand[a];
      if (lh.coprime(G[k].leading_monomial())) continue;
      const Monomial& l = lcms[a];
      std::uint32_t sh = s + (l.degree() - lh.degree());
      std::uint32_t sk = sugar[k] + (l.degree() - G[k].leading_monomial().degree());
      pairs.push_back({k, hi, l, std::max(sh, sk)});
    }
    for (std::size_t k = 0; k < hi; ++k) {
      if (active[k] && lh.divides(G[k].leading_monomial())) active[k] = false;
    }
    rebuild_reducers();
  };

  // seed with the inputs, interreduced one at a time
  std::vector<Polynomial> inputs;
  for (auto& g : gens) {
    if (!g.ring() || g.is_zero()) continue;
    inputs.push_back(g.in_ring(ring));
  }
  std::sort(inputs.begin(), inputs.end(), [&](const Polynomial& a, const Polynomial& b) {
    int c = ord.compare(a.leading_monomial(), b.leading_monomial());
    if (c != 0) return c < 0;
    return a.size() < b.size();
  });
  for (auto& g : inputs) {
    Polynomial h = detail::reduce(g, reducers, true);
    if (h.is_zero()) continue;
    std::uint32_t s = g.total_degree();
    install(h.monic(), s);
    if (G.back().is_constant()) break;
  }

  auto pair_less = [&](const detail::CriticalPair& a, const detail::CriticalPair& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = ord.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };

  bool unit = !G.empty() && G.back().is_constant();
  while (!pairs.empty() && !unit) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    detail::CriticalPair p = *it;
    *it = std::move(pairs.back());
    pairs.pop_back();
    Polynomial s = GroebnerBasis::s_polynomial(G[p.i], G[p.j]);
    Polynomial h = detail::reduce(s, reducers, true);
    if (h.is_zero()) continue;
    install(h.monic(), p.sugar);
    unit = G.back().is_constant();
  }

  // minimal basis, then interreduce tails
  std::vector<Polynomial> minimal;
  if (unit) {
    minimal.push_back(Polynomial::constant(ring, 1));
  } else {
    for (std::size_t k = 0; k < G.size(); ++k) {
      if (active[k]) minimal.push_back(G[k]);
    }
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    detail::Reducers others;
    for (std::size_t m = 0; m < minimal.size(); ++m) {
      if (m != k) others.add(&minimal[m]);
    }
    const auto& lt = minimal[k].leading_term();
    Polynomial tail = Polynomial::from_terms(
        ring, std::vector<Term>(minimal[k].terms().begin() + 1, minimal[k].terms().end()));
    Polynomial r = detail::reduce(tail, others, true);
    reduced.push_back(Polynomial::monomial(ring, lt.mono, lt.coeff) + r);
  }
  out.gens_ = std::move(reduced);
  out.index();
  return out;
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) { return G.normal_form(f); }

inline bool ideal_membership(const Polynomial& f, const GroebnerBasis& G) { return G.contains(f); }

}  // namespace hk
