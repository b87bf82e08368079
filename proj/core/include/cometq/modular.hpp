#pragma once

#include "cometq/quotient.hpp"

#include <cstdint>
#include <map>

namespace cometq {

// Prime field adaptor for the elimination engine; p must be below 2^31 so
// products fit in uint64.
struct FpField {
  uint64_t p;
  using Elem = uint64_t;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem x) const { return x == 0; }
  Elem neg(Elem x) const { return x == 0 ? 0 : p - x; }
  Elem add(Elem a, Elem b) const {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem pow(Elem a, uint64_t e) const;
  Elem inv(Elem a) const;
  // v = alpha evaluation of a Laurent polynomial (alpha invertible).
  Elem eval(const Laurent& f, Elem alpha) const;
};

struct DimsOptions {
  int specializations = 3;      // independent (prime, alpha) towers
  uint64_t seed = 20260814;     // deterministic alpha choice
  size_t exact_word_limit = 4000;  // degrees at most this many words also run exactly
};

// Dimension table of every graded piece in the truncation box.
// Large degrees are computed by GF(p) specialization towers (v -> alpha mod p)
// whose ranks agree across `specializations` independent choices; since
// specialization can only drop rank, each tower dimension is a rigorous upper
// bound for the exact dimension. Degrees within the exact word limit are also
// row-reduced over Q(v), and the two tiers are required to agree there.
struct DimsTable {
  std::map<Degree, size_t> dim;
  std::map<Degree, bool> modular_only;  // true when no exact confirmation ran
};

DimsTable dimension_table(const QuiverParams& p, const DimsOptions& opt = {});

// Single-tower dimension map for one (prime, alpha) pair; exposed for tests.
std::map<Degree, size_t> modular_dims_tower(const QuiverParams& p, uint64_t prime, uint64_t alpha);

}  // namespace cometq
