#include "cometq/identities.hpp"

#include <functional>
#include <stdexcept>

namespace cometq {

namespace {

long sign_pm(long k) { return (k % 2 + 2) % 2 == 0 ? 1 : -1; }

void need(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("check_identity: " + what);
}

// Each family produces (LHS, RHS) either symbolically or at a rational point.
struct Sides {
  Laurent lhs, rhs;
};

Sides triple_binom_sides(long a, long b, long c) {
  Laurent lhs;
  for (long s = 0; s <= c; ++s) {
    Laurent t = qbinom(b + s, s) * qbinom(a + s, c) * qbinom(b + c + 1, c - s);
    t.scale(sign_pm(s));
    lhs += t;
  }
  return {lhs, qbinom(a - b - 1, c)};
}

Sides q_triple_sides(long a, long b, long c) {
  Laurent lhs;
  for (long s = 0; s <= c; ++s) {
    Laurent t = qbinom_q(b + s, s) * qbinom_q(a + s, c) * qbinom_q(b + c + 1, c - s);
    t = t.shifted((s * s + s) / 2 - c * s);
    t.scale(sign_pm(s));
    lhs += t;
  }
  return {lhs, qbinom_q(a - b - 1, c).shifted(b * c + c)};
}

Sides steep_sum_sides(long r, long n) {
  Laurent lhs;
  for (long k = 0; k <= r; ++k) {
    Laurent t = qbinom(n - k + r, n) * qbinom(r + n + 1, k);
    t = t.shifted(-k * r);
    t.scale(sign_pm(k - r));
    lhs += t;
  }
  return {lhs, Laurent::v_pow(-r * (n + r + 1))};
}

Sides serre_core_sides(long l, long n, long t) {
  Laurent lhs = qint(l + 1 + n) * qint(l + 1 - t) + qint(t) * qint(n);
  Laurent rhs = qint(l + 1) * qint(l + 1 + n - t);
  return {lhs, rhs};
}

Sides pascal_sides(long N, long k) {
  Laurent rhs = qbinom(N - 1, k).shifted(k) + qbinom(N - 1, k - 1).shifted(k - N);
  return {qbinom(N, k), rhs};
}

// Both vanishing sums; returned as a single LHS (their concatenation must be
// zero, checked by shifting the second far away from the first).
Sides alternating_zero_sides(long r, long n) {
  Laurent full;
  for (long k = 0; k <= r; ++k) {
    Laurent t = qbinom(n - k + r, n) * qbinom(r + n, k);
    t = t.shifted(-k * r + k);
    t.scale(sign_pm(k - r));
    full += t;
  }
  Laurent core;
  for (long k = 0; k <= r; ++k) {
    Laurent t = qbinom(r, k).shifted(-k * (r - 1));
    t.scale(sign_pm(k - r));
    core += t;
  }
  // Pack both into one comparison; any nonzero part is a failure witness.
  Laurent lhs = full + core.shifted(10000);
  return {lhs, Laurent()};
}

Rat triple_binom_at(long a, long b, long c, const Rat& t) {
  Rat lhs = 0;
  for (long s = 0; s <= c; ++s)
    lhs += Rat(sign_pm(s)) * qbinom_eval(b + s, s, t) * qbinom_eval(a + s, c, t) *
           qbinom_eval(b + c + 1, c - s, t);
  return lhs - qbinom_eval(a - b - 1, c, t);
}

Rat pow_rat(const Rat& t, long e) {
  Rat p = 1;
  const Rat ti = 1 / t;
  const Rat& base = e >= 0 ? t : ti;
  for (long i = 0; i < (e >= 0 ? e : -e); ++i) p *= base;
  return p;
}

Rat qbinom_q_eval(long n, long k, const Rat& q) {
  // [m]_q = (1 - q^m)/(1 - q) evaluated directly. The explicit return type
  // forces evaluation: gmp expression templates must not outlive their
  // operands.
  auto qi = [&](long m) -> Rat { return (1 - pow_rat(q, m)) / (1 - q); };
  if (k < 0) return 0;
  Rat r = 1;
  for (long i = 0; i < k; ++i) r *= qi(n - i);
  for (long i = 2; i <= k; ++i) r /= qi(i);
  return r;
}

Rat q_triple_at(long a, long b, long c, const Rat& q) {
  Rat lhs = 0;
  for (long s = 0; s <= c; ++s)
    lhs += Rat(sign_pm(s)) * pow_rat(q, (s * s + s) / 2 - c * s) * qbinom_q_eval(b + s, s, q) *
           qbinom_q_eval(a + s, c, q) * qbinom_q_eval(b + c + 1, c - s, q);
  return lhs - pow_rat(q, b * c + c) * qbinom_q_eval(a - b - 1, c, q);
}

Rat steep_sum_at(long r, long n, const Rat& t) {
  Rat lhs = 0;
  for (long k = 0; k <= r; ++k)
    lhs += Rat(sign_pm(k - r)) * pow_rat(t, -k * r) * qbinom_eval(n - k + r, n, t) *
           qbinom_eval(r + n + 1, k, t);
  return lhs - pow_rat(t, -r * (n + r + 1));
}

Rat serre_core_at(long l, long n, long tt, const Rat& t) {
  return qint_eval(l + 1 + n, t) * qint_eval(l + 1 - tt, t) + qint_eval(tt, t) * qint_eval(n, t) -
         qint_eval(l + 1, t) * qint_eval(l + 1 + n - tt, t);
}

Rat pascal_at(long N, long k, const Rat& t) {
  return qbinom_eval(N, k, t) - pow_rat(t, k) * qbinom_eval(N - 1, k, t) -
         pow_rat(t, k - N) * qbinom_eval(N - 1, k - 1, t);
}

Rat alternating_zero_at(long r, long n, const Rat& t) {
  Rat full = 0, core = 0;
  for (long k = 0; k <= r; ++k) {
    full += Rat(sign_pm(k - r)) * pow_rat(t, -k * r + k) * qbinom_eval(n - k + r, n, t) *
            qbinom_eval(r + n, k, t);
    core += Rat(sign_pm(k - r)) * pow_rat(t, -k * (r - 1)) * qbinom_eval(r, k, t);
  }
  return abs(full) + abs(core);
}

Sides dispatch_sides(const std::string& name, const std::vector<long>& p) {
  if (name == "triple_binom") {
    need(p.size() == 3 && p[0] >= 0 && p[1] >= 0 && p[2] >= 0, "triple_binom wants (a,b,c) >= 0");
    return triple_binom_sides(p[0], p[1], p[2]);
  }
  if (name == "q_triple") {
    need(p.size() == 3 && p[0] >= 0 && p[1] >= 0 && p[2] >= 0, "q_triple wants (a,b,c) >= 0");
    return q_triple_sides(p[0], p[1], p[2]);
  }
  if (name == "steep_sum") {
    need(p.size() == 2 && p[0] >= 0 && p[1] >= 1, "steep_sum wants (r>=0, n>=1)");
    return steep_sum_sides(p[0], p[1]);
  }
  if (name == "serre_core") {
    need(p.size() == 3 && p[2] >= 0 && p[2] <= p[0] && p[1] >= 0, "serre_core wants 0<=t<=l, n>=0");
    return serre_core_sides(p[0], p[1], p[2]);
  }
  if (name == "pascal") {
    need(p.size() == 2 && p[0] >= 1 && p[1] >= 0, "pascal wants (N>=1, k>=0)");
    return pascal_sides(p[0], p[1]);
  }
  if (name == "alternating_zero") {
    need(p.size() == 2 && p[0] >= 1 && p[1] >= 0, "alternating_zero wants (r>=1, n>=0)");
    return alternating_zero_sides(p[0], p[1]);
  }
  throw std::invalid_argument("check_identity: unknown fact '" + name + "'");
}

}  // namespace

std::vector<std::string> identity_names() {
  return {"triple_binom", "q_triple",  "steep_sum",
          "serre_core",   "pascal",    "alternating_zero"};
}

IdentityReport check_identity(const std::string& name, const std::vector<long>& params) {
  Sides s = dispatch_sides(name, params);
  IdentityReport rep{name, params, s.lhs == s.rhs, ""};
  if (!rep.pass) rep.witness = "lhs = " + s.lhs.str() + " ; rhs = " + s.rhs.str();
  return rep;
}

bool check_identity_at(const std::string& name, const std::vector<long>& p, const Rat& t) {
  if (name == "triple_binom") return triple_binom_at(p[0], p[1], p[2], t) == 0;
  if (name == "q_triple") return q_triple_at(p[0], p[1], p[2], t) == 0;
  if (name == "steep_sum") return steep_sum_at(p[0], p[1], t) == 0;
  if (name == "serre_core") return serre_core_at(p[0], p[1], p[2], t) == 0;
  if (name == "pascal") return pascal_at(p[0], p[1], t) == 0;
  if (name == "alternating_zero") return alternating_zero_at(p[0], p[1], t) == 0;
  throw std::invalid_argument("check_identity_at: unknown fact '" + name + "'");
}

std::vector<std::vector<long>> identity_grid(const std::string& name, long bound) {
  if (bound < 1) throw std::invalid_argument("identity_grid: bound must be >= 1");
  std::vector<std::vector<long>> g;
  if (name == "triple_binom" || name == "q_triple") {
    for (long a = 0; a <= bound; ++a)
      for (long b = 0; b <= bound; ++b)
        for (long c = 0; c <= bound; ++c) g.push_back({a, b, c});
  } else if (name == "steep_sum") {
    for (long r = 0; r <= bound; ++r)
      for (long n = 1; n <= bound; ++n) g.push_back({r, n});
  } else if (name == "serre_core") {
    for (long l = 0; l <= bound - 1; ++l)
      for (long n = 0; n <= bound - 1; ++n)
        for (long t = 0; t <= l; ++t) g.push_back({l, n, t});
  } else if (name == "pascal") {
    for (long N = 1; N <= bound + 4; ++N)
      for (long k = 0; k <= bound + 4; ++k) g.push_back({N, k});
  } else if (name == "alternating_zero") {
    for (long r = 1; r <= bound; ++r)
      for (long n = 0; n <= bound; ++n) g.push_back({r, n});
  } else {
    throw std::invalid_argument("identity_grid: unknown fact '" + name + "'");
  }
  return g;
}

}  // namespace cometq
