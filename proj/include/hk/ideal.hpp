#pragma once

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hk/groebner.hpp"
#include "hk/monomial_ideal.hpp"
#include "hk/polynomial.hpp"

namespace hk {

/// R = S / J for an ambient polynomial ring S.  Cheap to copy: copies share
/// the defining ideal and its cached Groebner basis.
class QuotientRing {
 public:
  QuotientRing() = default;

  explicit QuotientRing(RingPtr ambient, std::vector<Polynomial> defining = {}) {
    if (!ambient) throw std::invalid_argument("quotient ring needs an ambient ring");
    auto st = std::make_shared<State>();
    st->ambient = ambient->order() == MonomialOrder::grevlex() ? ambient
                                                                : ambient->with_order(MonomialOrder::grevlex());
    for (auto& f : defining) {
      if (!f.ring()) continue;
      if (!same_ring(f.ring(), st->ambient)) f = f.in_ring(st->ambient);
      if (!f.is_zero()) st->defining.push_back(std::move(f));
    }
    std::vector<Polynomial> seed = st->defining;
    seed.push_back(Polynomial(st->ambient));
    st->basis = buchberger(std::move(seed), MonomialOrder::grevlex());
    if (st->basis.is_unit_ideal()) throw std::invalid_argument("defining ideal is the unit ideal");
    st->dimension = monomial_dimension(st->basis.leading_monomials(), st->ambient->nvars());
    state_ = std::move(st);
  }

  const RingPtr& ambient() const { return state().ambient; }
  const PrimeField& field() const { return ambient()->field(); }
  std::size_t nvars() const { return ambient()->nvars(); }
  const std::vector<Polynomial>& defining_generators() const { return state().defining; }
  const GroebnerBasis& defining_basis() const { return state().basis; }
  /// Krull dimension of S/J, read off the leading-term ideal.
  std::size_t dimension() const { return state().dimension; }

  Polynomial variable(std::size_t i) const { return Polynomial::variable(ambient(), i); }
  Polynomial variable(const std::string& name) const {
    auto i = ambient()->index_of(name);
    if (i < 0) throw std::invalid_argument("unknown variable " + name);
    return variable(static_cast<std::size_t>(i));
  }
  Polynomial constant(std::int64_t c) const { return Polynomial::constant(ambient(), c); }

  /// R / (extra).
  QuotientRing quotient_by(const std::vector<Polynomial>& extra) const {
    std::vector<Polynomial> gens = defining_basis().generators();
    gens.insert(gens.end(), extra.begin(), extra.end());
    return QuotientRing(ambient(), std::move(gens));
  }

  bool is_zero(const Polynomial& f) const { return defining_basis().contains(f); }

  bool valid() const { return static_cast<bool>(state_); }

  bool operator==(const QuotientRing& o) const {
    return state_ == o.state_ ||
           (state_ && o.state_ && *ambient() == *o.ambient() && defining_basis() == o.defining_basis());
  }

 private:
  struct State {
    RingPtr ambient;
    std::vector<Polynomial> defining;
    GroebnerBasis basis;
    std::size_t dimension = 0;
  };
  const State& state() const {
    if (!state_) throw std::logic_error("use of an empty QuotientRing");
    return *state_;
  }
  std::shared_ptr<const State> state_;
};

/// Ideal of a quotient ring, stored by ambient preimages.  The Groebner basis
/// of (generators) + J is computed once on demand and shared among copies.
class Ideal {
 public:
  Ideal() = default;
  Ideal(QuotientRing ring, std::vector<Polynomial> gens)
      : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
      if (!g.ring()) continue;
      if (!same_ring(g.ring(), ring_.ambient())) {
        if (g.ring()->names() != ring_.ambient()->names()) {
          throw RingMismatch("ideal generator from a different ring");
        }
        g = g.in_ring(ring_.ambient());
      }
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  static Ideal unit(const QuotientRing& R) { return Ideal(R, {R.constant(1)}); }
  static Ideal zero(const QuotientRing& R) { return Ideal(R, {}); }
  /// The homogeneous maximal ideal (x_1, ..., x_n).
  static Ideal maximal(const QuotientRing& R) {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < R.nvars(); ++i) vars.push_back(R.variable(i));
    return Ideal(R, std::move(vars));
  }

  const QuotientRing& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  /// Reduced Groebner basis (grevlex) of generators + J in the ambient ring.
  const GroebnerBasis& basis() const {
    std::call_once(cache_->once, [this] {
      std::vector<Polynomial> all = ring_.defining_basis().generators();
      all.insert(all.end(), gens_.begin(), gens_.end());
      all.push_back(Polynomial(ring_.ambient()));
      cache_->basis = buchberger(std::move(all), MonomialOrder::grevlex());
    });
    return cache_->basis;
  }

  bool contains(const Polynomial& f) const { return basis().contains(f); }
  bool is_unit() const { return basis().is_unit_ideal(); }
  /// Zero in R, i.e. contained in J.
  bool is_zero() const {
    for (const auto& g : gens_) {
      if (!ring_.is_zero(g)) return false;
    }
    return true;
  }

  /// Generators with the defining ideal folded in.
  std::vector<Polynomial> ambient_generators() const {
    std::vector<Polynomial> all = gens_;
    const auto& J = ring_.defining_basis().generators();
    all.insert(all.end(), J.begin(), J.end());
    return all;
  }

  void check_ring(const Ideal& o) const {
    if (!(ring_ == o.ring_)) throw RingMismatch("ideals of different rings");
  }

 private:
  struct Cache {
    std::once_flag once;
    GroebnerBasis basis;
  };
  QuotientRing ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

inline bool is_subset(const Ideal& I, const Ideal& J) {
  I.check_ring(J);
  for (const auto& g : I.generators()) {
    if (!J.contains(g)) return false;
  }
  return true;
}

inline bool ideal_equal(const Ideal& I, const Ideal& J) {
  I.check_ring(J);
  return I.basis() == J.basis();
}

inline Ideal operator+(const Ideal& I, const Ideal& J) {
  I.check_ring(J);
  std::vector<Polynomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens));
}

inline Ideal operator*(const Ideal& I, const Ideal& J) {
  I.check_ring(J);
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) {
    for (const auto& g : J.generators()) {
      auto p = f * g;
      if (!p.is_zero()) gens.push_back(std::move(p));
    }
  }
  return Ideal(I.ring(), std::move(gens));
}

/// I^n from all n-fold products of generators; (1) for n <= 0.
inline Ideal power(const Ideal& I, long n) {
  if (n <= 0) return Ideal::unit(I.ring());
  return Ideal(I.ring(), multiset_products(I.generators(), static_cast<unsigned>(n), I.ring().ambient()));
}

/// Exact quotient g / f; throws if f does not divide g.
inline Polynomial exact_divide(const Polynomial& g, const Polynomial& f) {
  g.check_ring(f);
  if (f.is_zero()) throw std::domain_error("division by zero polynomial");
  const auto& F = g.field();
  const auto inv_lc = F.inv(f.leading_coefficient());
  std::vector<Term> quotient;
  Polynomial rest = g;
  while (!rest.is_zero()) {
    const auto& lt = rest.leading_term();
    if (!f.leading_monomial().divides(lt.mono)) {
      throw std::domain_error("polynomial division is not exact");
    }
    Term q{F.mul(lt.coeff, inv_lc), lt.mono / f.leading_monomial()};
    quotient.push_back(q);
    rest = rest.sub_mul_term(q.coeff, q.mono, f);
  }
  return Polynomial::from_terms(g.ring(), std::move(quotient));
}

/// Elements of the ideal generated by `gens` that avoid the first `block`
/// variables of their ring, returned in the ring without that block.
/// `gens` must live in a ring whose order eliminates that block.
inline std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, std::size_t block,
                                         const RingPtr& target) {
  if (gens.empty()) return {};
  const auto& ord = gens.front().ring()->order();
  if (ord.kind() != MonomialOrder::Kind::Elimination || ord.block() != block) {
    if (!(block == 0 || ord.kind() == MonomialOrder::Kind::Lex)) {
      throw std::invalid_argument("eliminate requires an elimination order for the block");
    }
  }
  GroebnerBasis G = buchberger(gens, ord);
  std::vector<Polynomial> out;
  for (const auto& g : G.generators()) {
    bool free = true;
    for (std::size_t i = 0; i < block && free; ++i) free = g.leading_monomial()[i] == 0;
    if (free) out.push_back(g.projected_into(target, block));
  }
  return out;
}

namespace detail {

/// Generators of (A) ∩ (B) in the ambient ring of `ring` via t*A + (1-t)*B.
inline std::vector<Polynomial> ambient_intersection(const RingPtr& ring, const std::vector<Polynomial>& A,
                                                    const std::vector<Polynomial>& B) {
  RingPtr ext = ring->with_leading_block({"_t"});
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& a : A) gens.push_back(t * a.shifted_into(ext, 1));
  for (const auto& b : B) gens.push_back(one_minus_t * b.shifted_into(ext, 1));
  gens.push_back(Polynomial(ext));
  return eliminate(gens, 1, ring);
}

/// (A : f) in the ambient ring as (A ∩ (f)) / f.
inline std::vector<Polynomial> ambient_colon(const RingPtr& ring, const std::vector<Polynomial>& A,
                                             const Polynomial& f) {
  std::vector<Polynomial> out;
  for (const auto& g : ambient_intersection(ring, A, {f})) out.push_back(exact_divide(g, f));
  return out;
}

}  // namespace detail

/// I ∩ J.
inline Ideal intersect(const Ideal& I, const Ideal& J) {
  I.check_ring(J);
  const auto& R = I.ring();
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;
  return Ideal(R, detail::ambient_intersection(R.ambient(), I.basis().generators(), J.basis().generators()));
}

/// (I : f) = {r : r f ∈ I}.
inline Ideal colon(const Ideal& I, const Polynomial& f) {
  const auto& R = I.ring();
  Polynomial g = f.in_ring(R.ambient());
  if (R.is_zero(g)) throw std::domain_error("colon by an element that is zero in the ring");
  if (I.contains(g)) return Ideal::unit(R);
  return Ideal(R, detail::ambient_colon(R.ambient(), I.basis().generators(), g));
}

/// (I : J) = ∩_j (I : f_j) over the generators f_j of J.
inline Ideal colon(const Ideal& I, const Ideal& J) {
  I.check_ring(J);
  if (J.is_zero()) throw std::domain_error("colon by the zero ideal");
  const auto& R = I.ring();
  Ideal result = Ideal::unit(R);
  for (const auto& f : J.generators()) {
    if (R.is_zero(f)) continue;
    result = intersect(result, colon(I, f));
  }
  return result;
}

}  // namespace hk
