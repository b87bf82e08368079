#pragma once

#include "cometq/crystal.hpp"
#include "cometq/quotient.hpp"

namespace cometq {

// ftilde_{w0}(ftilde_{w1}(... ftilde_{w_{k-1}}(1)...)), reduced in q.
NCPoly opword_image(GradedQuotient& q, const OpWord& w);

// All operator words of the given degree. In exact mode the only imaginary
// step admitted is (i,1), where left multiplication by F_(i,1) IS the crystal
// operator; permissive mode admits every loop generator (i,l) even though
// l >= 2 acts through the surrogate. Words are emitted in a fixed order
// (real colors ascending, then loop sizes ascending, at every position).
std::vector<OpWord> enumerate_opwords(const QuiverParams& p, const Degree& d,
                                      bool permissive = false);

// A-basis of one degree piece of the crystal lattice, where A is the ring of
// rational functions regular at v^{-1} = 0 (a discrete valuation ring) and
// the piece is the A-span of all operator-word images inside U^-[d].
//
// Columns are coordinates over the canonical quotient basis of the degree.
// Reduction is valuation-greedy: each step picks the remaining entry of
// maximal order (most negative valuation) as pivot and clears its row from
// every other remaining column with coefficients that all lie in A, so the
// surviving columns form a genuine A-basis. Column k has zeros in the pivot
// rows of columns 0..k-1, which makes membership testing a single sweep.
struct LatticeBasis {
  Degree d;
  size_t ncoords = 0;                     // dim U^-[d]
  std::vector<OpWord> opwords;            // every enumerated operator word
  std::vector<std::vector<RatFun>> cols;  // reduced A-basis columns
  std::vector<size_t> pivots;             // pivot coordinate of each column
  size_t rank() const { return cols.size(); }
};

LatticeBasis lattice_build(GradedQuotient& q, const Degree& d, bool permissive = false);

struct LatticeMembership {
  bool in_span = false;     // lies in the Q(v)-span of the basis columns
  bool in_lattice = false;  // ... with all coefficients in A
  bool in_vinv = false;     // ... with all coefficients in v^{-1} A
  std::vector<RatFun> coeffs;  // one per basis column; empty when !in_span
};

// Decompose a coordinate vector over the reduced basis. The coefficients are
// unique, so the three flags are exact statements about x.
LatticeMembership lattice_member(const LatticeBasis& L, const std::vector<RatFun>& x);

// x == y modulo v^{-1} L at this degree. Throws std::invalid_argument when
// either argument fails lattice membership: that is itself a violation of
// lattice stability, never a legitimate "false".
bool lattice_equiv(const LatticeBasis& L, const std::vector<RatFun>& x,
                   const std::vector<RatFun>& y);
bool lattice_equiv(GradedQuotient& q, const LatticeBasis& L, const NCPoly& x, const NCPoly& y);

}  // namespace cometq
