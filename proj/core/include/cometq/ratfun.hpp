#pragma once

#include "cometq/laurent.hpp"

#include <optional>

namespace cometq {

// Rational function in v over Q, kept in a canonical form:
//  - zero is num = 0, den = 1;
//  - otherwise gcd(num, den) = 1 in Q[v], the denominator has lowest exponent
//    0 and leading coefficient 1 (the numerator absorbs the shift/scale, and
//    may be a genuine Laurent polynomial).
// Equality of canonical forms is the notion of identity everywhere.
class RatFun {
 public:
  RatFun() : num_(), den_(1) {}
  RatFun(const Laurent& n) : num_(n), den_(1) {}
  RatFun(const Rat& c) : num_(c), den_(1) {}
  RatFun(long c) : num_(c), den_(1) {}
  RatFun(const Laurent& n, const Laurent& d);

  static RatFun v_pow(long e) { return RatFun(Laurent::v_pow(e)); }

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == Laurent(1); }
  // Numerator as a Laurent polynomial; throws when den != 1.
  const Laurent& as_laurent() const;

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
  RatFun inv() const { return RatFun(Laurent(1)) / *this; }

  bool operator==(const RatFun& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  // Order at v^{-1} = 0: top degree of numerator minus top degree of
  // denominator. Zero has no order (empty optional) and counts as regular.
  std::optional<long> order() const;
  // Member of the ring A of rational functions regular at v^{-1} = 0.
  bool regular_at_vinv() const;
  // Member of the maximal ideal v^{-1} A.
  bool in_vinv_ideal() const;

  Rat eval(const Rat& t) const;
  std::string str() const;

 private:
  Laurent num_, den_;
  void canonicalize();
};

// Monic polynomial gcd in Q[v] of two Laurent polynomials shifted to lowest
// exponent 0; gcd(0, b) = normalized b.
Laurent poly_gcd(Laurent a, Laurent b);

}  // namespace cometq
