#pragma once

#include "cometq/identities.hpp"
#include "cometq/lattice.hpp"

namespace cometq {

// Structural facts about the truncated quotient, its z-operators, and the
// crystal lattice, each checked exactly. Names and parameter shapes:
//
//   moving_fjs (l, n)   F_(i,l) F_j^(l+1+n) equals the alternating binomial
//                       sum of F_j^(l+1+n-t) F_(i,l) F_j^(t), t = 0..l
//   gen_serre  (a, b)   F_(i,a) F_(i,b) satisfies a Serre relation of order
//                       at most a+b (orders are additive under products)
//   endo_serre (l)      F_(i,l) satisfies the order-l Serre relation and none
//                       of lower order
//   z_recursion (l,k,c) z_{k,c} = ( z_{k,c-1} F_j - v^{-l+2(c-k-1)} F_j
//                       z_{k,c-1} + [k] v^{-l+2(c-k)} z_{k-1,c-1} ) / [c]
//   z_scaling  (l,k,c)  z_{k,c} = v^{k(c-k-l)} z_{0,c-k}
//   z_vanishing (l,c)   z_{0,c} = 0 for c > l
//   expansion  (l, n)   F_(i,l) F_j^(l+1+n) = sum_{t=0}^{l} v^{-t(n+t+1)}
//                       F_j^(t+n+1) z_{0,l-t}
//   in_linfty  (c)      z_{0,c} (loop size 1, c <= 1) is lattice-equivalent
//                       to the operator-word image ftilde_(i,1) ftilde_j^c 1
//   opassoc (xn,xm,zn,zm)  ftilde_j(x z) = (ftilde_j x) z and
//                       ftilde_(i,l)(x z) = (ftilde_(i,l) x) z for every
//                       basis word x of degree (xn,(xm)) and every kernel
//                       basis element z of K_j at (zn,(zm))
//   ftilde_commute (n,m1,m2)  ftilde_{j1} ftilde_{j2} = ftilde_{j2}
//                       ftilde_{j1} on every basis word of (n,(m1,m2));
//                       needs r >= 2 (the only zero pairings are real-real)
//   eprime_commute (n,m1,m2)  e'_{j1} e'_{j2} = e'_{j2} e'_{j1} on every
//                       basis word of (n,(m1,m2)); needs r >= 2
//   eprime_descends (n, m...)  every flanked relation word of degree
//                       (n,(m...)) maps under every e'_iota to zero in the
//                       quotient (the derivation respects the ideal)
//   kj_nested (n,m1,m2)  decomposing any K_{j2}-kernel element along j1
//                       yields levels that still lie in K_{j2}; needs r >= 2
//   decomp (color, n, m...)  every basis element of degree (n,(m...)) splits
//                       uniquely as sum_l F_j^(l) z_l with z_l in K_j for the
//                       chosen real color: the levels lie in the kernel and
//                       reassemble to the element exactly
//   crystal_serre_lattice (n)  ftilde_(i,1) ftilde_j^{n+2} 1 is lattice-
//                       equivalent to ftilde_j ftilde_(i,1) ftilde_j^{n+1} 1
//   partinL (n, m)      decomposing any lattice generator of degree (n,(m))
//                       along j yields levels inside the lattice piece of
//                       their own degree
//   rightmult (a, c)    right-multiplying any lattice generator of degree
//                       (1,(a)) by z_{0,c} (loop size 1, c <= 1, an element
//                       of K_j that lies in the lattice) lands in the
//                       lattice piece of the product degree
//
// Real-direction facts use color 1 (and color 2 where two are needed).
std::vector<std::string> algebra_fact_names();

// Exact check of one fact instance. Throws std::invalid_argument for unknown
// names, wrong arity, or parameters outside the truncation box of q.
IdentityReport verify_algebra_fact(GradedQuotient& q, const std::string& fact,
                                   const std::vector<long>& params);

// The documented parameter grid of a fact, clipped to the box of q. Facts
// needing more real colors than q has yield an empty grid.
std::vector<std::vector<long>> algebra_fact_grid(const GradedQuotient& q,
                                                 const std::string& fact);

}  // namespace cometq
