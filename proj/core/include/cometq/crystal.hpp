#pragma once

#include "cometq/quiver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cometq {

// A sequence of Kashiwara operators; entry 0 is applied LAST, so the word
// (g0, g1, ..., gk) denotes ftilde_{g0} ftilde_{g1} ... ftilde_{gk} applied
// to 1. Loop sizes are unbounded here: the combinatorial model needs no
// truncation.
using OpWord = std::vector<Gen>;

Degree opword_degree(const OpWord& w, int r);
std::string opword_str(const OpWord& w, int r);
// Inverse of opword_str: space-separated tokens "j", "j2", "(i,c)"; "1" is
// the empty word. Real tokens may carry a convenience exponent ("j^3") that
// expands to repeated letters; opword_str never emits one.
OpWord parse_opword(const std::string& s, int r);

// Block of a steep sequence: one imaginary entry (i,c) followed by real
// multiplicities p (one per color), each bounded by c.
struct SteepBlock {
  int c = 1;
  std::vector<int> p;
  bool operator==(const SteepBlock& o) const { return c == o.c && p == o.p; }
  bool operator!=(const SteepBlock& o) const { return !(*this == o); }
};

// Canonical form of a crystal element: an unconstrained leading real block
// p0 followed by steep blocks. Real entries within a block are stored as
// multiplicities (real-real commutation is structural).
struct Steep {
  std::vector<int> p0;
  std::vector<SteepBlock> blocks;
  bool operator==(const Steep& o) const { return p0 == o.p0 && blocks == o.blocks; }
  bool operator!=(const Steep& o) const { return !(*this == o); }
};

Degree steep_degree(const Steep& b, int r);

// Whether the word already has the steep block shape (every post-imaginary
// real multiplicity bounded by its block size; the leading block is free).
bool is_steep(const OpWord& w, int r);

// The canonical operator word of a steep sequence: p0 reals (colors
// ascending), then per block the imaginary entry followed by its reals.
OpWord steep_word(const Steep& b, int r);

// The unique steep sequence equivalent to w under real-real commutation and
// the crystal Serre rewrite ftilde_iota ftilde_j^{l+1+n} -> ftilde_j
// ftilde_iota ftilde_j^{l+n}. One right-to-left pass moves every block's
// per-color excess into the previous block (ultimately into p0); blocks to
// the left are processed later, so a single pass absorbs all excess.
Steep normalize(const OpWord& w, int r);

// Kashiwara operators on canonical forms. apply_f prepends the entry and
// normalizes; apply_e returns the unique steep preimage under apply_f, or
// nothing. The brute-force apply_e enumerates the lower degree and filters;
// apply_e_real_fast is the direct rule (decrement p0, or fail at zero).
Steep apply_f(const Gen& g, const Steep& b, int r);
std::optional<Steep> apply_e(const Gen& g, const Steep& b, int r);
std::optional<Steep> apply_e_real_fast(int color, const Steep& b);

// Largest power of etilde_{j_color} defined on b; equals p0[color-1].
long epsilon_real(int color, const Steep& b);

// All steep sequences of degree d, sorted by (number of blocks, text form).
std::vector<Steep> enumerate_steep(const Degree& d, int r);

// Text form "j1^a j2^b | (i,c1) j1^e | (i,c2) ..." with blocks separated by
// '|', multiplicity 1 printed bare, empty leading block omitted, the empty
// sequence printed as "1". For r = 1 the single real prints as "j".
// parse_steep round-trips exactly and rejects malformed input.
std::string steep_str(const Steep& b, int r);
Steep parse_steep(const std::string& s, int r);

}  // namespace cometq
