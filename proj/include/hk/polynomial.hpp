#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hk/field.hpp"
#include "hk/monomial.hpp"

namespace hk {

/// Thrown when operands come from different rings or orders.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ambient polynomial ring k[x_1..x_n] together with the active monomial order.
class PolyRing {
 public:
  PolyRing(PrimeField field, std::vector<std::string> names,
           MonomialOrder order = MonomialOrder::grevlex())
      : field_(field), names_(std::move(names)), order_(order) {
    if (names_.size() > kMaxVars) {
      throw std::invalid_argument("too many variables (max " + std::to_string(kMaxVars) + ")");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable " + names_[i]);
      }
    }
  }

  static std::shared_ptr<const PolyRing> make(PrimeField field, std::vector<std::string> names,
                                              MonomialOrder order = MonomialOrder::grevlex()) {
    return std::make_shared<const PolyRing>(field, std::move(names), order);
  }

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const MonomialOrder& order() const { return order_; }

  std::ptrdiff_t index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? -1 : it - names_.begin();
  }

  bool operator==(const PolyRing&) const = default;

  std::shared_ptr<const PolyRing> with_order(MonomialOrder ord) const {
    return make(field_, names_, ord);
  }

  /// Ring with `extra` new variables prepended, under elimination order for
  /// that block.
  std::shared_ptr<const PolyRing> with_leading_block(const std::vector<std::string>& extra) const {
    std::vector<std::string> names = extra;
    names.insert(names.end(), names_.begin(), names_.end());
    return make(field_, std::move(names), MonomialOrder::elimination(extra.size()));
  }

 private:
  PrimeField field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

struct Term {
  PrimeField::Element coeff;
  Monomial mono;
  bool operator==(const Term&) const = default;
};

/// Sparse polynomial: terms strictly descending under the ring's order, no
/// zero coefficients.  Immutable in the public interface.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, std::int64_t c) {
    Polynomial p(ring);
    auto e = p.ring_->field().from_int(c);
    if (e) p.terms_.push_back({e, Monomial(p.ring_->nvars())});
    return p;
  }

  static Polynomial variable(RingPtr ring, std::size_t index) {
    Polynomial p(ring);
    p.terms_.push_back({1, Monomial::variable(p.ring_->nvars(), index)});
    return p;
  }

  static Polynomial monomial(RingPtr ring, const Monomial& m, PrimeField::Element c = 1) {
    Polynomial p(ring);
    if (c % ring->field().characteristic()) p.terms_.push_back({c % ring->field().characteristic(), m});
    return p;
  }

  /// Builds a polynomial from arbitrary (possibly unsorted, duplicated, zero)
  /// terms.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const PrimeField& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  PrimeField::Element leading_coefficient() const { return leading_term().coeff; }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_) {
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    }
    return true;
  }

  /// Sort and merge terms; idempotent.
  void normalize() {
    const auto& ord = ring_->order();
    const auto& f = ring_->field();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      t.coeff %= f.characteristic();
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = f.add(out.back().coeff, t.coeff);
      } else {
        out.push_back(t);
      }
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
    }
    terms_ = std::move(out);
  }

  bool is_normalized() const {
    const auto& ord = ring_->order();
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].coeff == 0 || terms_[i].coeff >= field().characteristic()) return false;
      if (i && ord.compare(terms_[i - 1].mono, terms_[i].mono) <= 0) return false;
    }
    return true;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scale(field().inv(leading_coefficient()));
  }

  Polynomial scale(PrimeField::Element c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({field().mul(t.coeff, c), t.mono});
    return r;
  }

  /// c * m * this.  Multiplication by a monomial preserves the term order.
  Polynomial mul_term(PrimeField::Element c, const Monomial& m) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({field().mul(t.coeff, c), t.mono * m});
    return r;
  }

  /// this - c * m * g, fused into a single merge pass.
  Polynomial sub_mul_term(PrimeField::Element c, const Monomial& m, const Polynomial& g) const {
    check_ring(g);
    const auto& f = field();
    const auto& ord = ring_->order();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    auto negc = f.neg(c);
    std::size_t i = 0, j = 0;
    Term gt{};
    bool have_g = false;
    auto next_g = [&]() {
      if (j < g.terms_.size()) {
        gt = {f.mul(g.terms_[j].coeff, negc), g.terms_[j].mono * m};
        ++j;
        have_g = true;
      } else {
        have_g = false;
      }
    };
    next_g();
    while (i < terms_.size() || have_g) {
      if (!have_g) {
        r.terms_.push_back(terms_[i++]);
        continue;
      }
      if (i == terms_.size()) {
        r.terms_.push_back(gt);
        next_g();
        continue;
      }
      int cmp = ord.compare(terms_[i].mono, gt.mono);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back(gt);
        next_g();
      } else {
        auto s = f.add(terms_[i].coeff, gt.coeff);
        if (s) r.terms_.push_back({s, gt.mono});
        ++i;
        next_g();
      }
    }
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (e) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  /// Reinterprets this polynomial in `target`, which must have the same field
  /// and variable count (only the order may differ).
  Polynomial in_ring(const RingPtr& target) const {
    if (target == ring_) return *this;
    if (target->nvars() != ring_->nvars() || !(target->field() == ring_->field())) {
      throw RingMismatch("cannot reinterpret polynomial in a ring of different shape");
    }
    Polynomial r(target);
    r.terms_ = terms_;
    if (!(target->order() == ring_->order())) r.normalize();
    return r;
  }

  /// Embeds into `target`, mapping variable i to variable i + offset.
  Polynomial shifted_into(const RingPtr& target, std::size_t offset) const {
    if (target->nvars() < ring_->nvars() + offset || !(target->field() == ring_->field())) {
      throw RingMismatch("target ring too small for embedding");
    }
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(target->nvars());
      for (std::size_t i = 0; i < ring_->nvars(); ++i) m.set(i + offset, t.mono[i]);
      terms.push_back({t.coeff, m});
    }
    return from_terms(target, std::move(terms));
  }

  /// Inverse of shifted_into: drops the first `offset` variables, which must
  /// not occur.
  Polynomial projected_into(const RingPtr& target, std::size_t offset) const {
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(target->nvars());
      for (std::size_t i = 0; i < ring_->nvars(); ++i) {
        if (i < offset) {
          if (t.mono[i]) throw std::domain_error("projection of a polynomial using eliminated variables");
        } else {
          m.set(i - offset, t.mono[i]);
        }
      }
      terms.push_back({t.coeff, m});
    }
    return from_terms(target, std::move(terms));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return a.sub_mul_term(a.field().neg(1), Monomial(a.ring_->nvars()), b);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a.sub_mul_term(1, Monomial(a.ring_->nvars()), b);
  }
  friend Polynomial operator-(const Polynomial& a) { return a.scale(a.field().neg(1)); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    // multiply the shorter operand's terms through the longer one and merge
    const Polynomial& lo = a.size() <= b.size() ? a : b;
    const Polynomial& hi = a.size() <= b.size() ? b : a;
    std::vector<Term> terms;
    terms.reserve(lo.size() * hi.size());
    for (const auto& s : lo.terms_) {
      for (const auto& t : hi.terms_) {
        terms.push_back({a.field().mul(s.coeff, t.coeff), s.mono * t.mono});
      }
    }
    return from_terms(a.ring_, std::move(terms));
  }

  bool operator==(const Polynomial& o) const {
    return same_ring(ring_, o.ring_) && terms_ == o.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      std::int64_t c = field().to_signed(t.coeff);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      std::int64_t a = c < 0 ? -c : c;
      bool printed = false;
      if (a != 1 || t.mono.is_one()) {
        os << a;
        printed = true;
      }
      for (std::size_t i = 0; i < ring_->nvars(); ++i) {
        if (!t.mono[i]) continue;
        if (printed) os << "*";
        os << ring_->names()[i];
        if (t.mono[i] > 1) os << "^" << t.mono[i];
        printed = true;
      }
      first = false;
    }
    return os.str();
  }

  void check_ring(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) throw RingMismatch("polynomials from different rings");
  }

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

inline Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

/// Maximal term of p under `ord` (which may differ from the ring's order).
inline Term leading_term(const Polynomial& p, const MonomialOrder& ord) {
  if (p.is_zero()) throw std::domain_error("leading term of the zero polynomial");
  if (ord == p.ring()->order()) return p.leading_term();
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms()) {
    if (ord.compare(t.mono, best->mono) > 0) best = &t;
  }
  return *best;
}

/// Products of all n-element multisets drawn from gens (n >= 0).
inline std::vector<Polynomial> multiset_products(const std::vector<Polynomial>& gens, unsigned n,
                                                 const RingPtr& ring) {
  std::vector<Polynomial> out;
  if (n == 0) {
    out.push_back(Polynomial::constant(ring, 1));
    return out;
  }
  std::vector<std::size_t> idx(n, 0);
  std::vector<Polynomial> prefix(n + 1);
  prefix[0] = Polynomial::constant(ring, 1);
  std::size_t k = gens.size();
  if (k == 0) return out;
  // iterate non-decreasing index sequences, reusing prefix products
  std::size_t start = 0;
  while (true) {
    for (std::size_t i = start; i < n; ++i) prefix[i + 1] = prefix[i] * gens[idx[i]];
    out.push_back(prefix[n]);
    std::size_t i = n;
    while (i > 0 && idx[i - 1] == k - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < n; ++j) idx[j] = idx[i - 1];
    start = i - 1;
  }
  return out;
}

}  // namespace hk
