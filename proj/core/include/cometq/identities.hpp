#pragma once

#include "cometq/qarith.hpp"

#include <string>
#include <vector>

namespace cometq {

struct IdentityReport {
  std::string fact;
  std::vector<long> params;
  bool pass = false;
  std::string witness;  // canonical LHS / RHS on failure, empty on pass
};

// Supported identity families and their parameter shapes:
//   triple_binom     (a, b, c)  alternating triple product of v-binomials
//                               summing to [a-b-1 choose c]
//   q_triple         (a, b, c)  the q = v^2 analogue with its power-of-q
//                               weights
//   steep_sum        (r, n)     alternating v-binomial sum collapsing to
//                               v^{-r(n+r+1)}; n >= 1
//   serre_core       (l, n, t)  [l+1+n][l+1-t] + [t][n] = [l+1][l+1+n-t]
//   pascal           (N, k)     v-Pascal rule [N choose k] =
//                               v^k [N-1 choose k] + v^{k-N} [N-1 choose k-1]
//   alternating_zero (r, n)     the two vanishing alternating sums used to
//                               telescope steep expansions; r >= 1
std::vector<std::string> identity_names();

// Symbolic verification: both sides are built as canonical Laurent
// polynomials and compared exactly. Throws std::invalid_argument for unknown
// names or wrong arity/range.
IdentityReport check_identity(const std::string& name, const std::vector<long>& params);

// Independent numeric path: the same identity evaluated at v = t with plain
// rational arithmetic (no Laurent polynomials involved).
bool check_identity_at(const std::string& name, const std::vector<long>& params, const Rat& t);

// The documented parameter grid of a family, used by the verification
// suites; `bound` scales the primary parameter ranges (default covers the
// full acceptance grid).
std::vector<std::vector<long>> identity_grid(const std::string& name, long bound = 6);

}  // namespace cometq
