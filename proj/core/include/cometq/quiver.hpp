#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cometq {

// Truncation box for the comet quiver with one non-isotropic imaginary vertex
// i (omega > 1 loops) and r real vertices j_1..j_r, each joined to i by one
// edge. omega >= 2 is required throughout (non-isotropic case).
struct QuiverParams {
  long omega = 2;
  int r = 1;
  int maxI = 4;    // largest total imaginary weight n
  int maxJ = 4;    // largest multiplicity of each real color
  int maxLoop = 4; // largest loop generator size l for F_(i,l)
  void validate() const;
};

// Nonnegative weight (n, m_1..m_r): n counts copies of vertex i, m_k copies
// of j_k. The degree of a monomial in U^- is minus its weight; all code works
// with weights.
struct Degree {
  int n = 0;
  std::vector<int> m;

  Degree() = default;
  Degree(int nn, std::vector<int> mm) : n(nn), m(std::move(mm)) {}

  bool operator==(const Degree& o) const { return n == o.n && m == o.m; }
  bool operator!=(const Degree& o) const { return !(*this == o); }
  bool operator<(const Degree& o) const {
    if (n != o.n) return n < o.n;
    return m < o.m;
  }
  // Componentwise comparison (partial order).
  bool leq(const Degree& o) const;
  Degree operator+(const Degree& o) const;
  // Componentwise difference; caller must ensure o.leq(*this).
  Degree operator-(const Degree& o) const;
  bool is_zero() const;
  int total() const;
  bool within(const QuiverParams& p) const;
  std::string str() const;  // "(n,(m1,...,mr))"
};

// Symmetric bilinear form on weights determined by (i,i) = 2 - 2*omega,
// (i,j_k) = -1, (j_k,j_k) = 2, (j_k,j_l) = 0 for k != l.
long pairing(const Degree& a, const Degree& b, long omega);

// A generator index: real color k (1-based) or imaginary loop size l >= 1.
struct Gen {
  bool imag = false;
  int a = 1;

  static Gen real(int color) { return Gen{false, color}; }
  static Gen loop(int l) { return Gen{true, l}; }
  bool operator==(const Gen& o) const { return imag == o.imag && a == o.a; }
  bool operator!=(const Gen& o) const { return !(*this == o); }
  Degree weight(int r) const;
  std::string str(int r) const;  // "j" / "j2" / "(i,3)"
};

long pairing(const Gen& a, const Gen& b, const QuiverParams& p);

// Dense id table for the truncated generator alphabet:
// ids 0..r-1 are the real colors, ids r..r+maxLoop-1 are loops l = 1..maxLoop.
struct GenTable {
  int r = 0;
  int maxLoop = 0;

  explicit GenTable(const QuiverParams& p) : r(p.r), maxLoop(p.maxLoop) {}
  int count() const { return r + maxLoop; }
  Gen gen(uint8_t id) const;
  uint8_t id(const Gen& g) const;
  Degree weight(uint8_t id) const { return gen(id).weight(r); }
};

}  // namespace cometq
