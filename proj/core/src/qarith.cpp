#include "cometq/qarith.hpp"

namespace cometq {

Laurent qint(long n) {
  if (n == 0) return Laurent();
  if (n < 0) return -qint(-n);
  Laurent r;
  for (long e = n - 1; e >= 1 - n; e -= 2) r += Laurent::v_pow(e);
  return r;
}

Laurent qfact(long n) {
  if (n < 0) throw std::domain_error("qfact: negative argument");
  Laurent r(1);
  for (long t = 2; t <= n; ++t) r *= qint(t);
  return r;
}

Laurent qbinom(long n, long k) {
  if (k < 0) return Laurent();
  Laurent num(1);
  for (long t = 0; t < k; ++t) num *= qint(n - t);
  return num.div_exact(qfact(k));
}

Laurent qint_q(long n) {
  Laurent r;
  if (n >= 0) {
    for (long e = 0; e < n; ++e) r += Laurent::v_pow(e);
  } else {
    // (1 - q^n)/(1 - q) = -(q^n + q^{n+1} + ... + q^{-1})
    for (long e = n; e <= -1; ++e) r -= Laurent::v_pow(e);
  }
  return r;
}

Laurent qfact_q(long n) {
  if (n < 0) throw std::domain_error("qfact_q: negative argument");
  Laurent r(1);
  for (long t = 2; t <= n; ++t) r *= qint_q(t);
  return r;
}

Laurent qbinom_q(long n, long k) {
  if (k < 0) return Laurent();
  Laurent num(1);
  for (long t = 0; t < k; ++t) num *= qint_q(n - t);
  return num.div_exact(qfact_q(k));
}

Laurent qbinom_from_q_analogue(long n, long k) {
  return qbinom_q(n, k).sub_v_squared().shifted(k * (k - n));
}

Rat qint_eval(long n, const Rat& t) {
  if (t == 0 || t == 1 || t == -1) throw std::domain_error("qint_eval: bad point");
  // (t^n - t^{-n})/(t - t^{-1})
  Rat tn = 1;
  const Rat ti = 1 / t;
  const Rat& base = n >= 0 ? t : ti;
  for (long i = 0; i < (n >= 0 ? n : -n); ++i) tn *= base;
  return (tn - 1 / tn) / (t - ti);
}

Rat qfact_eval(long n, const Rat& t) {
  Rat r = 1;
  for (long i = 2; i <= n; ++i) r *= qint_eval(i, t);
  return r;
}

Rat qbinom_eval(long n, long k, const Rat& t) {
  if (k < 0) return 0;
  Rat r = 1;
  for (long i = 0; i < k; ++i) r *= qint_eval(n - i, t);
  return r / qfact_eval(k, t);
}

}  // namespace cometq
