#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <stdexcept>
#include <vector>

namespace cometq {

// Sparse row over a field F: entries sorted by column DESCENDING, leading
// entry first, no zero coefficients.
template <class F>
struct SparseRow {
  std::vector<std::pair<uint32_t, typename F::Elem>> e;
  bool empty() const { return e.empty(); }
  uint32_t lead() const { return e.front().first; }
};

// Incremental row echelon form under the "leading column = largest column"
// convention. Stored rows have leading coefficient 1; tails are kept lazy
// (they may reference other pivot columns) until back_substitute() is called.
// Insertion reduces the incoming row in a dense accumulator, so each merge
// costs O(size of merged pivot row) regardless of how full the accumulator
// already is.
template <class F>
class Echelon {
 public:
  Echelon(F f, uint32_t ncols)
      : fld_(std::move(f)), ncols_(ncols), pivot_of_col_(ncols, -1), acc_(ncols, fld_.zero()) {}

  uint32_t ncols() const { return ncols_; }
  size_t rank() const { return rows_.size(); }
  const std::vector<int32_t>& pivot_of_col() const { return pivot_of_col_; }
  const SparseRow<F>& row(size_t i) const { return rows_[i]; }
  const F& field() const { return fld_; }

  // Reduce r against the current pivots; store it when a fresh pivot column
  // remains. Returns true exactly when the rank grew.
  bool insert(const SparseRow<F>& r) {
    if (r.empty()) return false;
    std::priority_queue<uint32_t> heap;
    for (const auto& [c, x] : r.e) {
      if (fld_.is_zero(x)) continue;
      set_acc(c, x, heap);
    }
    while (!heap.empty()) {
      uint32_t c = heap.top();
      heap.pop();
      if (fld_.is_zero(acc_[c])) continue;  // stale or cancelled
      int32_t pr = pivot_of_col_[c];
      if (pr < 0) {
        store_pivot(c);
        return true;
      }
      // acc -= acc[c] * row(pr); the pivot coefficient of row(pr) is 1.
      typename F::Elem coef = acc_[c];
      acc_[c] = fld_.zero();
      const auto& prow = rows_[pr].e;
      for (size_t i = 1; i < prow.size(); ++i) {
        const auto& [cc, x] = prow[i];
        set_acc(cc, fld_.neg(fld_.mul(coef, x)), heap);
      }
    }
    clear_acc();
    return false;
  }

  // Rewrites every stored row so its tail touches only non-pivot columns.
  // Valid because tails only reference columns smaller than their pivot, so
  // an ascending sweep meets substituted rows already in normal form.
  void back_substitute() {
    std::vector<uint32_t> order;
    order.reserve(ncols_);
    for (uint32_t c = 0; c < ncols_; ++c)
      if (pivot_of_col_[c] >= 0) order.push_back(c);
    for (uint32_t c : order) {
      SparseRow<F>& r = rows_[pivot_of_col_[c]];
      std::map<uint32_t, typename F::Elem, std::greater<uint32_t>> acc;
      bool dirty = false;
      for (size_t i = 1; i < r.e.size(); ++i) {
        const auto& [cc, x] = r.e[i];
        if (pivot_of_col_[cc] < 0) {
          add_to(acc, cc, x);
          continue;
        }
        dirty = true;
        const auto& sub = rows_[pivot_of_col_[cc]].e;  // already normal form
        for (size_t k = 1; k < sub.size(); ++k)
          add_to(acc, sub[k].first, fld_.neg(fld_.mul(x, sub[k].second)));
      }
      if (!dirty) continue;
      SparseRow<F> nr;
      nr.e.reserve(acc.size() + 1);
      nr.e.emplace_back(c, fld_.one());
      for (auto& [cc, x] : acc) nr.e.emplace_back(cc, std::move(x));
      r = std::move(nr);
    }
  }

  // Non-pivot columns in ascending order: the canonical basis of the
  // cokernel.
  std::vector<uint32_t> basis_cols() const {
    std::vector<uint32_t> b;
    for (uint32_t c = 0; c < ncols_; ++c)
      if (pivot_of_col_[c] < 0) b.push_back(c);
    return b;
  }

 private:
  void add_to(std::map<uint32_t, typename F::Elem, std::greater<uint32_t>>& acc, uint32_t c,
              const typename F::Elem& x) {
    auto it = acc.find(c);
    if (it == acc.end()) {
      acc.emplace(c, x);
    } else {
      it->second = fld_.add(it->second, x);
      if (fld_.is_zero(it->second)) acc.erase(it);
    }
  }

  void set_acc(uint32_t c, const typename F::Elem& x, std::priority_queue<uint32_t>& heap) {
    if (fld_.is_zero(acc_[c])) {
      acc_[c] = x;
      if (!fld_.is_zero(x)) {
        heap.push(c);
        touched_.push_back(c);
      }
    } else {
      acc_[c] = fld_.add(acc_[c], x);
    }
  }

  void store_pivot(uint32_t c) {
    SparseRow<F> r;
    typename F::Elem inv = fld_.inv(acc_[c]);
    r.e.emplace_back(c, fld_.one());
    acc_[c] = fld_.zero();
    // Collect remaining support strictly below c, sorted descending.
    // touched_ may hold duplicates (a column can cancel and reappear).
    std::sort(touched_.begin(), touched_.end(), std::greater<uint32_t>());
    uint32_t prev = UINT32_MAX;
    for (uint32_t cc : touched_) {
      if (cc == prev || cc >= c) continue;
      prev = cc;
      if (fld_.is_zero(acc_[cc])) continue;
      r.e.emplace_back(cc, fld_.mul(inv, acc_[cc]));
    }
    clear_acc();
    pivot_of_col_[c] = (int32_t)rows_.size();
    rows_.push_back(std::move(r));
  }

  void clear_acc() {
    for (uint32_t c : touched_) acc_[c] = fld_.zero();
    touched_.clear();
  }

  F fld_;
  uint32_t ncols_;
  std::vector<int32_t> pivot_of_col_;
  std::vector<SparseRow<F>> rows_;
  std::vector<typename F::Elem> acc_;
  std::vector<uint32_t> touched_;
};

}  // namespace cometq
