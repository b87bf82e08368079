#include "cometq/laurent.hpp"

#include <sstream>

namespace cometq {

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.t_) {
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.t_) {
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) t_.erase(it);
    }
  }
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
  return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) {
      Rat p = ca * cb;
      auto it = r.t_.find(ea + eb);
      if (it == r.t_.end()) {
        r.t_.emplace(ea + eb, p);
      } else {
        it->second += p;
        if (it->second == 0) r.t_.erase(it);
      }
    }
  return r;
}

Laurent& Laurent::scale(const Rat& c) {
  if (c == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [e, cc] : t_) cc *= c;
  return *this;
}

Laurent Laurent::shifted(long e) const {
  Laurent r;
  for (const auto& [ee, c] : t_) r.t_.emplace(ee + e, c);
  return r;
}

Laurent Laurent::bar() const {
  Laurent r;
  for (const auto& [e, c] : t_) r.t_.emplace(-e, c);
  return r;
}

Laurent Laurent::sub_v_squared() const {
  Laurent r;
  for (const auto& [e, c] : t_) r.t_.emplace(2 * e, c);
  return r;
}

Rat Laurent::eval(const Rat& t) const {
  if (t == 0) throw std::domain_error("Laurent::eval at 0");
  Rat acc = 0;
  Rat tinv = 1 / t;
  for (const auto& [e, c] : t_) {
    Rat p = 1;
    const Rat& base = e >= 0 ? t : tinv;
    for (long i = 0; i < (e >= 0 ? e : -e); ++i) p *= base;
    acc += c * p;
  }
  return acc;
}

Laurent Laurent::div_exact(const Laurent& d) const {
  if (d.is_zero()) throw std::domain_error("Laurent::div_exact by zero");
  Laurent rem = *this, quo;
  while (!rem.is_zero()) {
    long e = rem.max_exp() - d.max_exp();
    Rat c = rem.leading_coeff() / d.leading_coeff();
    Laurent t = Laurent::term(c, e);
    quo += t;
    rem -= t * d;
    if (!rem.is_zero() && rem.max_exp() >= e + d.max_exp())
      throw std::logic_error("Laurent::div_exact: no progress");
    // An exact quotient has term exponents >= min_exp(a) - min_exp(d).
    if (!rem.is_zero() && rem.max_exp() - d.max_exp() < min_exp() - d.min_exp())
      throw std::domain_error("Laurent::div_exact: not divisible");
  }
  return quo;
}

std::string Laurent::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const Rat& c = it->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << Rat(abs(c)).get_str() << "*v^" << it->first;
    first = false;
  }
  return os.str();
}

}  // namespace cometq
