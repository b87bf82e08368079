#include "cometq/ratfun.hpp"

namespace cometq {

namespace {

// Remainder of polynomial division a mod b in Q[v]; inputs must have
// min_exp >= 0 and b != 0.
Laurent poly_mod(Laurent a, const Laurent& b) {
  while (!a.is_zero() && a.max_exp() >= b.max_exp()) {
    Rat c = a.leading_coeff() / b.leading_coeff();
    a -= b.shifted(a.max_exp() - b.max_exp()).scale(c);
  }
  return a;
}

Laurent normalize_poly(const Laurent& p) {
  if (p.is_zero()) return p;
  Laurent r = p.shifted(-p.min_exp());
  r.scale(1 / r.leading_coeff());
  return r;
}

}  // namespace

Laurent poly_gcd(Laurent a, Laurent b) {
  a = normalize_poly(a);
  b = normalize_poly(b);
  while (!b.is_zero()) {
    Laurent r = poly_mod(a, b);
    a = std::move(b);
    b = normalize_poly(r);
  }
  return a;
}

RatFun::RatFun(const Laurent& n, const Laurent& d) : num_(n), den_(d) {
  if (d.is_zero()) throw std::domain_error("RatFun: zero denominator");
  canonicalize();
}

void RatFun::canonicalize() {
  if (num_.is_zero()) {
    den_ = Laurent(1);
    return;
  }
  long shift = num_.min_exp() - den_.min_exp();
  Laurent n0 = num_.shifted(-num_.min_exp());
  Laurent d0 = den_.shifted(-den_.min_exp());
  Laurent g = poly_gcd(n0, d0);
  if (g.max_exp() > 0) {
    n0 = n0.div_exact(g);
    d0 = d0.div_exact(g);
  }
  Rat lc = d0.leading_coeff();
  d0.scale(1 / lc);
  n0.scale(1 / lc);
  num_ = n0.shifted(shift);
  den_ = std::move(d0);
}

const Laurent& RatFun::as_laurent() const {
  if (!is_polynomial()) throw std::domain_error("RatFun::as_laurent: nontrivial denominator");
  return num_;
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun();
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw std::domain_error("RatFun: division by zero");
  if (a.is_zero()) return RatFun();
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

std::optional<long> RatFun::order() const {
  if (is_zero()) return std::nullopt;
  return num_.max_exp() - den_.max_exp();
}

bool RatFun::regular_at_vinv() const {
  auto o = order();
  return !o || *o <= 0;
}

bool RatFun::in_vinv_ideal() const {
  auto o = order();
  return !o || *o <= -1;
}

Rat RatFun::eval(const Rat& t) const {
  Rat d = den_.eval(t);
  if (d == 0) throw std::domain_error("RatFun::eval: pole");
  return num_.eval(t) / d;
}

std::string RatFun::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace cometq
