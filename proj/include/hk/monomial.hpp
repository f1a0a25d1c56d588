#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hk {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector with a fixed per-ring length.  Stored inline; exponents are
/// 16-bit with overflow checks on multiplication.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  explicit Monomial(std::size_t nvars) : nvars_(check_nvars(nvars)) {}

  Monomial(std::initializer_list<unsigned> exps) : nvars_(check_nvars(exps.size())) {
    std::size_t i = 0;
    for (unsigned e : exps) set(i++, e);
  }

  explicit Monomial(std::span<const unsigned> exps) : nvars_(check_nvars(exps.size())) {
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
  }

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1) {
    Monomial m(nvars);
    m.set(index, power);
    return m;
  }

  std::size_t nvars() const { return nvars_; }
  std::uint32_t degree() const { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  /// Bit i set iff variable i occurs (i < 32; kMaxVars is smaller).
  std::uint32_t support_mask() const { return mask_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, unsigned e) {
    if (i >= nvars_) throw std::out_of_range("monomial variable index");
    if (e > 0xFFFFu) throw std::overflow_error("monomial exponent overflow");
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = static_cast<Exponent>(e);
    if (e) mask_ |= (1u << i);
    else mask_ &= ~(1u << i);
  }

  bool divides(const Monomial& other) const {
    if ((mask_ & ~other.mask_) != 0 || degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  bool coprime(const Monomial& other) const { return (mask_ & other.mask_) == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      unsigned e = static_cast<unsigned>(a.exps_[i]) + b.exps_[i];
      if (e > 0xFFFFu) throw std::overflow_error("monomial exponent overflow");
      r.exps_[i] = static_cast<Exponent>(e);
    }
    r.degree_ = a.degree_ + b.degree_;
    r.mask_ = a.mask_ | b.mask_;
    return r;
  }

  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    if (!b.divides(a)) throw std::domain_error("monomial division is not exact");
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      r.exps_[i] = static_cast<Exponent>(a.exps_[i] - b.exps_[i]);
      if (r.exps_[i]) r.mask_ |= (1u << i);
    }
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    r.mask_ = a.mask_ | b.mask_;
    return r;
  }

  /// Quotient lcm(a,b)/b, the monomial colon (a) : b.
  static Monomial colon(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      r.set(i, a.exps_[i] > b.exps_[i] ? a.exps_[i] - b.exps_[i] : 0);
    }
    return r;
  }

  bool operator==(const Monomial& o) const {
    return nvars_ == o.nvars_ && degree_ == o.degree_ && exps_ == o.exps_;
  }

  std::size_t hash() const {
    std::size_t h = nvars_;
    for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003u + exps_[i];
    return h;
  }

  std::vector<unsigned> exponents() const {
    return std::vector<unsigned>(exps_.begin(), exps_.begin() + nvars_);
  }

 private:
  static std::uint8_t check_nvars(std::size_t n) {
    if (n > kMaxVars) {
      throw std::invalid_argument("at most " + std::to_string(kMaxVars) +
                                  " variables are supported");
    }
    return static_cast<std::uint8_t>(n);
  }
  static void check_same(const Monomial& a, const Monomial& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("monomials from different rings");
  }

  std::array<Exponent, kMaxVars> exps_{};
  std::uint32_t degree_ = 0;
  std::uint32_t mask_ = 0;
  std::uint8_t nvars_ = 0;
};

/// Total monomial orders.  Elimination(b) compares the total degree in the
/// first b variables first, then grevlex on that block, then grevlex on the
/// remaining variables.
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Elimination };

  constexpr MonomialOrder() = default;
  static constexpr MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static constexpr MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static constexpr MonomialOrder elimination(std::size_t block) {
    return MonomialOrder(Kind::Elimination, block);
  }

  constexpr Kind kind() const { return kind_; }
  constexpr std::size_t block() const { return block_; }

  /// Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::Grevlex:
        return grevlex_range(a, b, 0, a.nvars());
      case Kind::Lex:
        for (std::size_t i = 0; i < a.nvars(); ++i) {
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
      case Kind::Elimination: {
        std::size_t blk = std::min(block_, a.nvars());
        if (int c = grevlex_range(a, b, 0, blk)) return c;
        return grevlex_range(a, b, blk, a.nvars());
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string name() const {
    switch (kind_) {
      case Kind::Grevlex: return "grevlex";
      case Kind::Lex: return "lex";
      case Kind::Elimination: return "elimination(" + std::to_string(block_) + ")";
    }
    return "?";
  }

  bool operator==(const MonomialOrder&) const = default;

 private:
  constexpr MonomialOrder(Kind k, std::size_t b) : kind_(k), block_(b) {}

  static int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                           std::size_t hi) {
    unsigned da = 0, db = 0;
    if (lo == 0 && hi == a.nvars()) {
      da = a.degree();
      db = b.degree();
    } else {
      for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
      }
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  Kind kind_ = Kind::Grevlex;
  std::size_t block_ = 0;
};

}  // namespace hk

template <>
struct std::hash<hk::Monomial> {
  std::size_t operator()(const hk::Monomial& m) const noexcept { return m.hash(); }
};
