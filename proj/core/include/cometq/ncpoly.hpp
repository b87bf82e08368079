#pragma once

#include "cometq/quiver.hpp"
#include "cometq/ratfun.hpp"
#include "cometq/word.hpp"

#include <map>
#include <optional>

namespace cometq {

// Element of the free algebra on the truncated generator alphabet, with
// rational-function coefficients. Term map is ordered, so equal elements have
// identical representations.
class NCPoly {
 public:
  NCPoly() = default;
  static NCPoly unit() { return monomial(Word{}); }
  static NCPoly monomial(const Word& w, const RatFun& c = RatFun(1));
  static NCPoly generator(const GenTable& tab, const Gen& g);

  bool is_zero() const { return t_.empty(); }
  const std::map<Word, RatFun>& terms() const { return t_; }
  void add_term(const Word& w, const RatFun& c);

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  NCPoly operator-() const;
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  NCPoly& scale(const RatFun& c);

  bool operator==(const NCPoly& o) const { return t_ == o.t_; }
  bool operator!=(const NCPoly& o) const { return !(*this == o); }

  NCPoly lmul(const Word& prefix) const;
  NCPoly rmul(const Word& suffix) const;

  // Weight of a homogeneous element; empty when zero; throws when mixed.
  std::optional<Degree> degree(const GenTable& tab) const;

  std::string str(const GenTable& tab) const;

 private:
  std::map<Word, RatFun> t_;
};

// Divided power F_{j_color}^{(t)} = F^t / [t]!.
NCPoly divided_power_real(const GenTable& tab, int color, long t);

struct Relation {
  std::string name;
  Degree deg;
  NCPoly elem;      // divided-power normalization, as documented
  NCPoly cleared;   // scaled to Laurent-polynomial coefficients (same ideal)
};

// Defining relations of U^- within the truncation box: one commutator per
// unordered pair of distinct real colors (the real-real Serre element
// degenerates to it and is deduplicated), and for every real color and loop
// generator (i,l) the Serre element
//   sum_{t+t'=l+1} (-1)^t F_j^{(t)} F_(i,l) F_j^{(t')}.
// Loop-loop pairs never commute here ((iota,kappa) != 0 when omega > 1), so
// no further relations exist.
std::vector<Relation> relation_set(const QuiverParams& p);

// Skew derivation e'_iota on the free algebra:
//   e'(F_kappa) = delta_{iota,kappa},
//   e'(yz) = e'(y) z + v^{(-iota,|y|)} y e'(z).
// On a word it removes each occurrence of iota's generator with the scalar
// v^{pairing(wt(iota), wt(prefix))}. It descends to the quotient.
NCPoly eprime_free(const QuiverParams& p, const Gen& iota, const NCPoly& x);

}  // namespace cometq
