#pragma once

#include "cometq/laurent.hpp"

namespace cometq {

// Balanced quantum integer [n] = (v^n - v^{-n})/(v - v^{-1}); any integer n.
Laurent qint(long n);
// [n]! for n >= 0.
Laurent qfact(long n);
// Gaussian binomial in the falling-factorial normalization
//   [n choose k] = [n][n-1]...[n-k+1] / [k]!,
// defined for every integer n and k >= 0 (k < 0 gives 0). Always a Laurent
// polynomial, e.g. [-1 choose k] = (-1)^k.
Laurent qbinom(long n, long k);

// One-parameter q-analogues (variable printed as v but read as q):
// [n]_q = (1 - q^n)/(1 - q), any integer n.
Laurent qint_q(long n);
Laurent qfact_q(long n);
Laurent qbinom_q(long n, long k);

// Conversion law between the two normalizations under q = v^2:
//   qbinom(n, k)(v) = v^{k(k-n)} * qbinom_q(n, k)(q)|_{q=v^2}.
// Returns the right-hand side so callers can compare against qbinom(n, k).
Laurent qbinom_from_q_analogue(long n, long k);

// Independent numeric path: quantum integers/binomials evaluated directly in
// rational arithmetic at v = t (t != 0, t^2 != 1), bypassing Laurent
// polynomials entirely. Used to cross-check symbolic identities under random
// rational specialization.
Rat qint_eval(long n, const Rat& t);
Rat qfact_eval(long n, const Rat& t);
Rat qbinom_eval(long n, long k, const Rat& t);

}  // namespace cometq
