#pragma once

#include "cometq/ncpoly.hpp"
#include "cometq/rref.hpp"

#include <map>
#include <memory>

namespace cometq {

// Field adaptor so the elimination engine can run over Q(v).
struct RatField {
  using Elem = RatFun;
  Elem zero() const { return RatFun(); }
  Elem one() const { return RatFun(1); }
  bool is_zero(const Elem& x) const { return x.is_zero(); }
  Elem neg(const Elem& x) const { return -x; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& x) const { return x.inv(); }
};

struct QuotientRangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One graded piece of the truncated quotient, with full reduction data:
// normal-form rows of the ideal (pivot word = minus tail over basis words)
// and the canonical basis (non-pivot words, ascending).
struct DegreePiece {
  Degree d;
  WordList words;
  std::unique_ptr<Echelon<RatField>> ech;
  std::vector<int32_t> col_to_basis;  // -1 on pivot columns
  std::vector<uint32_t> basis_cols;
  size_t dim() const { return basis_cols.size(); }
};

// Truncated generalized quantum group U^- for the comet quiver: free algebra
// on F_{j_1..j_r} and F_{(i,1)..(i,maxLoop)} modulo the relation_set ideal,
// graded piece by graded piece, over exact rational functions in v.
//
// Graded pieces are built lazily by the recursion
//   I_d = sum_g g * I_{d - wt(g)} + sum_rel rel * (basis words of d - deg rel)
// which generates the full degree-d ideal piece (right-flanked relation rows
// against arbitrary words reduce to the listed ones modulo the left tower).
class GradedQuotient {
 public:
  explicit GradedQuotient(const QuiverParams& p, size_t exact_word_limit = 20000);
  ~GradedQuotient();  // out of line: DecompData is incomplete here
  GradedQuotient(GradedQuotient&&) noexcept;
  GradedQuotient& operator=(GradedQuotient&&) noexcept;

  const QuiverParams& params() const { return p_; }
  const GenTable& table() const { return tab_; }
  const std::vector<Relation>& relations() const { return rels_; }
  size_t exact_word_limit() const { return limit_; }

  // Builds (and caches) the piece; throws QuotientRangeError when d or a
  // needed predecessor leaves the box or exceeds the word-count guard.
  const DegreePiece& piece(const Degree& d);
  size_t dim(const Degree& d) { return piece(d).dim(); }
  std::vector<Word> basis_words(const Degree& d);

  // Normal form of homogeneous x as coordinates over the canonical basis of
  // its degree (zero input is rejected: it has no degree).
  std::vector<RatFun> reduce(const NCPoly& x);
  std::vector<RatFun> reduce_at(const Degree& d, const NCPoly& x);
  // Normal form as a combination of basis words.
  NCPoly reduce_poly(const NCPoly& x);
  NCPoly from_coords(const Degree& d, const std::vector<RatFun>& coords);

  // --- skew derivations and the real-direction crystal structure ---

  // e'_iota on the quotient: free-algebra formula followed by reduction;
  // returns coordinates at degree d - wt(iota) (empty vector when that degree
  // has negative entries, i.e. e' vanishes).
  std::vector<RatFun> eprime(const Gen& iota, const NCPoly& x);
  NCPoly eprime_poly(const Gen& iota, const NCPoly& x);

  // Canonical basis of K_j[d] = ker(e'_j : U^-[d] -> U^-[d - e_j]), as
  // coordinate vectors over the degree-d basis.
  const std::vector<std::vector<RatFun>>& kernel_basis(int color, const Degree& d);

  // Unique decomposition x = sum_l F_j^{(l)} z_l with z_l in K_j; returns
  // coordinates of z_l over the basis of d - l*e_j, index l = 0.. while the
  // degree stays nonnegative. Throws std::logic_error if the assembled
  // direct-sum matrix is not invertible (the decomposition lemma failing).
  std::vector<std::vector<RatFun>> decompose_real(int color, const NCPoly& x);
  std::vector<std::vector<RatFun>> decompose_coords(int color, const Degree& d,
                                                    const std::vector<RatFun>& coords);

  // z-operator table: components of F_(i,l) F_j^{(c)} = sum_k F_j^{(k)} z_{k,c};
  // entry k is z_{k,c} as a normal-form element of degree (l, (c-k) e_color).
  std::vector<NCPoly> z_table(int l, int c, int color = 1);

  // Smallest a >= 0 with sum_{t+t'=a+1} (-1)^t F_j^{(t)} x F_j^{(t')} = 0 in
  // the quotient; empty when the search leaves the truncation box first.
  std::optional<long> serre_order(const NCPoly& x, int color = 1);

  // Kashiwara operators. Real direction: ftilde_j x = sum_l F_j^{(l+1)} z_l,
  // etilde_j x = sum_{l>=1} F_j^{(l-1)} z_l. Imaginary direction: left
  // multiplication by F_(i,l), which realizes ftilde_(i,l) exactly for l = 1
  // and as the documented surrogate for l > 1.
  NCPoly kashiwara_f(const Gen& iota, const NCPoly& x);
  NCPoly kashiwara_e_real(int color, const NCPoly& x);

 private:
  struct DecompData;

  QuiverParams p_;
  GenTable tab_;
  size_t limit_;
  std::vector<Relation> rels_;
  std::map<Degree, DegreePiece> pieces_;
  std::map<std::pair<int, Degree>, std::vector<std::vector<RatFun>>> kernels_;
  // shared_ptr erases the deleter, so DecompData can stay private to one
  // translation unit.
  std::map<std::pair<int, Degree>, std::shared_ptr<DecompData>> decomp_;

  void build(const Degree& d);
  SparseRow<RatField> to_row(const DegreePiece& piece, const NCPoly& x) const;
  DecompData& decomp_data(int color, const Degree& d);
};

// Dense linear solver over Q(v) with cached factorization (plain Gaussian
// elimination with first-nonzero pivoting).
class DenseSolver {
 public:
  // Columns of a square invertible matrix; throws std::logic_error otherwise.
  explicit DenseSolver(const std::vector<std::vector<RatFun>>& columns);
  size_t size() const { return n_; }
  std::vector<RatFun> solve(std::vector<RatFun> rhs) const;

 private:
  size_t n_;
  std::vector<std::vector<RatFun>> lu_;  // row-major combined factors
  std::vector<size_t> perm_;
};

}  // namespace cometq
