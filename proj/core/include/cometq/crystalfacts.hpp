#pragma once

#include "cometq/crystal.hpp"
#include "cometq/identities.hpp"

#include <vector>

namespace cometq {

// Every operator word of the given degree, loop letters of any size.
std::vector<OpWord> all_opwords(const Degree& d, int r);

// All single-rewrite neighbors of w: adjacent transpositions of distinct
// real letters, and the block rewrite (i,c) j^(c+1) <-> j (i,c) j^c in both
// directions (runs must be consecutive same-color letters). Every word of a
// congruence class is reachable through these steps.
std::vector<OpWord> rewrite_neighbors(const OpWord& w, int r);

// Coherence checks of the combinatorial crystal, one degree at a time.
// Parameter shape is the full degree (n, m1..mr); loop_bound caps the loop
// sizes of the operators applied on top of the degree.
//   confluence    normalize agrees on every single-rewrite neighbor of every
//                 word of the degree (soundness of the normal form)
//   ef_identity   apply_e(g, apply_f(g, b)) == b for every steep b and every
//                 operator g (reals and loops up to loop_bound)
//   injective     apply_f(g, .) is injective on the steep sequences of the
//                 degree for every such g
//   efast         the O(1) real lowering rule agrees with the brute-force
//                 preimage search, including definedness
std::vector<std::string> crystal_fact_names();
IdentityReport verify_crystal_fact(const std::string& fact, const Degree& d,
                                   int r, int loop_bound);

// The full suite over the box n <= bound, m_k <= bound.
std::vector<IdentityReport> crystal_coherence(int r, int bound);

}  // namespace cometq
