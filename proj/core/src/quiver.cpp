#include "cometq/quiver.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cometq {

void QuiverParams::validate() const {
  if (omega < 2) throw std::invalid_argument("QuiverParams: omega must be >= 2 (non-isotropic)");
  if (r < 0) throw std::invalid_argument("QuiverParams: r must be >= 0");
  if (maxI < 1 || maxJ < 0) throw std::invalid_argument("QuiverParams: bounds must be positive");
  if (maxLoop < 1 || maxLoop > maxI)
    throw std::invalid_argument("QuiverParams: need 1 <= maxLoop <= maxI");
}

bool Degree::leq(const Degree& o) const {
  if (n > o.n || m.size() != o.m.size()) return false;
  for (size_t k = 0; k < m.size(); ++k)
    if (m[k] > o.m[k]) return false;
  return true;
}

Degree Degree::operator+(const Degree& o) const {
  Degree d = *this;
  d.n += o.n;
  for (size_t k = 0; k < m.size(); ++k) d.m[k] += o.m[k];
  return d;
}

Degree Degree::operator-(const Degree& o) const {
  Degree d = *this;
  d.n -= o.n;
  for (size_t k = 0; k < m.size(); ++k) d.m[k] -= o.m[k];
  return d;
}

bool Degree::is_zero() const {
  if (n != 0) return false;
  for (int x : m)
    if (x != 0) return false;
  return true;
}

int Degree::total() const { return n + std::accumulate(m.begin(), m.end(), 0); }

bool Degree::within(const QuiverParams& p) const {
  if (n < 0 || n > p.maxI || (int)m.size() != p.r) return false;
  for (int x : m)
    if (x < 0 || x > p.maxJ) return false;
  return true;
}

std::string Degree::str() const {
  std::ostringstream os;
  os << "(" << n << ",(";
  for (size_t k = 0; k < m.size(); ++k) os << (k ? "," : "") << m[k];
  os << "))";
  return os.str();
}

long pairing(const Degree& a, const Degree& b, long omega) {
  long sa = 0, sb = 0, dot = 0;
  for (int x : a.m) sa += x;
  for (int x : b.m) sb += x;
  for (size_t k = 0; k < a.m.size(); ++k) dot += (long)a.m[k] * b.m[k];
  return (long)a.n * b.n * (2 - 2 * omega) - ((long)a.n * sb + (long)b.n * sa) + 2 * dot;
}

Degree Gen::weight(int r) const {
  Degree d;
  d.m.assign(r, 0);
  if (imag) {
    d.n = a;
  } else {
    if (a < 1 || a > r) throw std::out_of_range("Gen: real color out of range");
    d.m[a - 1] = 1;
  }
  return d;
}

std::string Gen::str(int r) const {
  if (imag) return "(i," + std::to_string(a) + ")";
  if (r == 1) return "j";
  return "j" + std::to_string(a);
}

long pairing(const Gen& a, const Gen& b, const QuiverParams& p) {
  return pairing(a.weight(p.r), b.weight(p.r), p.omega);
}

Gen GenTable::gen(uint8_t id) const {
  if (id < r) return Gen::real(id + 1);
  if (id < r + maxLoop) return Gen::loop(id - r + 1);
  throw std::out_of_range("GenTable::gen");
}

uint8_t GenTable::id(const Gen& g) const {
  if (!g.imag) {
    if (g.a < 1 || g.a > r) throw std::out_of_range("GenTable::id real color");
    return (uint8_t)(g.a - 1);
  }
  if (g.a < 1 || g.a > maxLoop) throw std::out_of_range("GenTable::id loop size");
  return (uint8_t)(r + g.a - 1);
}

}  // namespace cometq
