#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace cometq {

using Rat = mpq_class;

// Laurent polynomial in one variable v with exact rational coefficients.
// Terms are kept in a sorted map exponent -> nonzero coefficient, so equal
// polynomials have identical representations.
class Laurent {
 public:
  Laurent() = default;
  Laurent(const Rat& c) {
    if (c != 0) t_[0] = c;
  }
  Laurent(long c) : Laurent(Rat(c)) {}

  static Laurent v_pow(long e) { return term(1, e); }
  static Laurent term(const Rat& c, long e) {
    Laurent p;
    if (c != 0) p.t_[e] = c;
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  // Exponent range; only meaningful on nonzero polynomials.
  long min_exp() const { return t_.begin()->first; }
  long max_exp() const { return t_.rbegin()->first; }
  const std::map<long, Rat>& terms() const { return t_; }
  Rat coeff(long e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Rat(0) : it->second;
  }
  Rat leading_coeff() const { return t_.rbegin()->second; }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  Laurent operator-() const;
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  Laurent& scale(const Rat& c);

  bool operator==(const Laurent& o) const { return t_ == o.t_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // Multiplication by v^e.
  Laurent shifted(long e) const;
  // Bar involution v -> v^{-1}.
  Laurent bar() const;
  // Exponent doubling: p(v) -> p(v^2); used to compare against q-analogues
  // under q = v^2.
  Laurent sub_v_squared() const;
  // Evaluation at a nonzero rational point.
  Rat eval(const Rat& t) const;

  // Exact division; throws std::domain_error when the division leaves a
  // remainder.
  Laurent div_exact(const Laurent& d) const;

  // Canonical text form "c*v^e + ..." with strictly descending exponents,
  // e.g. "1*v^2 + 1*v^0 + 1*v^-2"; zero prints as "0".
  std::string str() const;

 private:
  std::map<long, Rat> t_;
};

}  // namespace cometq
