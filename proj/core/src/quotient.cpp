#include "cometq/quotient.hpp"

#include "cometq/qarith.hpp"

#include <algorithm>

namespace cometq {

GradedQuotient::GradedQuotient(const QuiverParams& p, size_t exact_word_limit)
    : p_(p), tab_(p), limit_(exact_word_limit), rels_(relation_set(p)) {
  p_.validate();
}

const DegreePiece& GradedQuotient::piece(const Degree& d) {
  auto it = pieces_.find(d);
  if (it != pieces_.end()) return it->second;
  if (!d.within(p_))
    throw QuotientRangeError("degree " + d.str() + " outside the truncation box");
  build(d);
  return pieces_.at(d);
}

void GradedQuotient::build(const Degree& d) {
  DegreePiece pc;
  pc.d = d;
  pc.words.words = words_of_degree(p_, d);
  const uint32_t n = pc.words.size();
  if (n > limit_)
    throw QuotientRangeError("degree " + d.str() + " has " + std::to_string(n) +
                             " words, above the exact-tier guard of " + std::to_string(limit_));
  pc.ech = std::make_unique<Echelon<RatField>>(RatField{}, n);

  // Relation rows: rel * (basis word of the complementary degree).
  for (const Relation& rel : rels_) {
    if (!rel.deg.leq(d)) continue;
    Degree rem = d - rel.deg;
    for (const Word& b : basis_words(rem)) {
      SparseRow<RatField> row = to_row(pc, rel.cleared.rmul(b));
      pc.ech->insert(row);
    }
  }
  // Left tower rows: g * (ideal rows one generator lower).
  for (int gid = 0; gid < tab_.count(); ++gid) {
    Degree wg = tab_.weight((uint8_t)gid);
    if (!wg.leq(d)) continue;
    const DegreePiece& prev = piece(d - wg);
    std::vector<uint32_t> remap(prev.words.size());
    for (uint32_t idx = 0; idx < prev.words.size(); ++idx) {
      Word w;
      w.reserve(prev.words.words[idx].size() + 1);
      w.push_back((uint8_t)gid);
      w.insert(w.end(), prev.words.words[idx].begin(), prev.words.words[idx].end());
      remap[idx] = pc.words.index_of(w);
    }
    for (size_t ri = 0; ri < prev.ech->rank(); ++ri) {
      SparseRow<RatField> row;
      row.e.reserve(prev.ech->row(ri).e.size());
      for (const auto& [c, x] : prev.ech->row(ri).e) row.e.emplace_back(remap[c], x);
      pc.ech->insert(row);
    }
  }

  pc.ech->back_substitute();
  pc.basis_cols = pc.ech->basis_cols();
  pc.col_to_basis.assign(n, -1);
  for (uint32_t b = 0; b < pc.basis_cols.size(); ++b) pc.col_to_basis[pc.basis_cols[b]] = (int32_t)b;
  pieces_.emplace(d, std::move(pc));
}

std::vector<Word> GradedQuotient::basis_words(const Degree& d) {
  const DegreePiece& pc = piece(d);
  std::vector<Word> out;
  out.reserve(pc.basis_cols.size());
  for (uint32_t c : pc.basis_cols) out.push_back(pc.words.words[c]);
  return out;
}

SparseRow<RatField> GradedQuotient::to_row(const DegreePiece& pc, const NCPoly& x) const {
  SparseRow<RatField> row;
  row.e.reserve(x.terms().size());
  // Term map is ascending in word order = ascending in column order.
  for (const auto& [w, c] : x.terms()) row.e.emplace_back(pc.words.index_of(w), c);
  std::reverse(row.e.begin(), row.e.end());
  return row;
}

std::vector<RatFun> GradedQuotient::reduce(const NCPoly& x) {
  auto d = x.degree(tab_);
  if (!d) throw std::invalid_argument("reduce: zero element has no degree");
  return reduce_at(*d, x);
}

std::vector<RatFun> GradedQuotient::reduce_at(const Degree& d, const NCPoly& x) {
  const DegreePiece& pc = piece(d);
  std::vector<RatFun> coords(pc.dim());
  for (const auto& [w, c] : x.terms()) {
    uint32_t col = pc.words.index_of(w);
    int32_t b = pc.col_to_basis[col];
    if (b >= 0) {
      coords[b] += c;
    } else {
      const auto& row = pc.ech->row(pc.ech->pivot_of_col()[col]).e;
      for (size_t i = 1; i < row.size(); ++i)
        coords[pc.col_to_basis[row[i].first]] -= c * row[i].second;
    }
  }
  return coords;
}

NCPoly GradedQuotient::reduce_poly(const NCPoly& x) {
  auto d = x.degree(tab_);
  if (!d) return NCPoly();
  return from_coords(*d, reduce_at(*d, x));
}

NCPoly GradedQuotient::from_coords(const Degree& d, const std::vector<RatFun>& coords) {
  const DegreePiece& pc = piece(d);
  if (coords.size() != pc.dim()) throw std::invalid_argument("from_coords: dimension mismatch");
  NCPoly r;
  for (size_t b = 0; b < coords.size(); ++b)
    if (!coords[b].is_zero()) r.add_term(pc.words.words[pc.basis_cols[b]], coords[b]);
  return r;
}

DenseSolver::DenseSolver(const std::vector<std::vector<RatFun>>& columns) : n_(columns.size()) {
  for (const auto& c : columns)
    if (c.size() != n_) throw std::logic_error("DenseSolver: not square");
  lu_.assign(n_, std::vector<RatFun>(n_));
  for (size_t c = 0; c < n_; ++c)
    for (size_t r = 0; r < n_; ++r) lu_[r][c] = columns[c][r];
  for (size_t k = 0; k < n_; ++k) {
    size_t pr = k;
    while (pr < n_ && lu_[pr][k].is_zero()) ++pr;
    if (pr == n_) throw std::logic_error("DenseSolver: singular matrix");
    if (pr != k) std::swap(lu_[pr], lu_[k]);
    perm_.push_back(pr);
    for (size_t r = k + 1; r < n_; ++r) {
      if (lu_[r][k].is_zero()) continue;
      RatFun f = lu_[r][k] / lu_[k][k];
      lu_[r][k] = f;
      for (size_t c = k + 1; c < n_; ++c) lu_[r][c] -= f * lu_[k][c];
    }
  }
}

std::vector<RatFun> DenseSolver::solve(std::vector<RatFun> rhs) const {
  if (rhs.size() != n_) throw std::invalid_argument("DenseSolver::solve: size mismatch");
  for (size_t k = 0; k < n_; ++k)
    if (perm_[k] != k) std::swap(rhs[k], rhs[perm_[k]]);
  for (size_t k = 0; k < n_; ++k)
    for (size_t r = k + 1; r < n_; ++r)
      if (!lu_[r][k].is_zero()) rhs[r] -= lu_[r][k] * rhs[k];
  for (size_t k = n_; k-- > 0;) {
    for (size_t c = k + 1; c < n_; ++c)
      if (!lu_[k][c].is_zero()) rhs[k] -= lu_[k][c] * rhs[c];
    rhs[k] /= lu_[k][k];
  }
  return rhs;
}

}  // namespace cometq
