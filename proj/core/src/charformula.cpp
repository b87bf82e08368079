#include "cometq/charformula.hpp"

#include "cometq/crystal.hpp"

#include <stdexcept>

namespace cometq {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

TruncSeries::TruncSeries(int r, int maxN, int maxM)
    : r_(r), maxN_(maxN), maxM_(maxM) {
  if (r < 0 || maxN < 0 || maxM < 0) bad("series box must be nonnegative");
  size_t size = (size_t)(maxN + 1);
  for (int k = 0; k < r; ++k) size *= (size_t)(maxM + 1);
  coef_.assign(size, 0);
}

size_t TruncSeries::index(const Degree& d) const {
  if ((int)d.m.size() != r_) bad("degree has wrong color count");
  if (d.n < 0 || d.n > maxN_) bad("degree outside series box: " + d.str());
  size_t idx = (size_t)d.n;
  for (int k = 0; k < r_; ++k) {
    if (d.m[k] < 0 || d.m[k] > maxM_) bad("degree outside series box: " + d.str());
    idx = idx * (size_t)(maxM_ + 1) + (size_t)d.m[k];
  }
  return idx;
}

long long TruncSeries::coeff(const Degree& d) const { return coef_[index(d)]; }
void TruncSeries::set_coeff(const Degree& d, long long c) { coef_[index(d)] = c; }
void TruncSeries::add_coeff(const Degree& d, long long c) { coef_[index(d)] += c; }

void for_each_degree(int r, int maxN, int maxM,
                     const std::function<void(const Degree&)>& fn) {
  Degree d(0, std::vector<int>(r, 0));
  for (d.n = 0; d.n <= maxN; ++d.n) {
    std::fill(d.m.begin(), d.m.end(), 0);
    while (true) {
      fn(d);
      int k = r - 1;
      while (k >= 0) {
        if (++d.m[k] <= maxM) break;
        d.m[k] = 0;
        --k;
      }
      if (k < 0) break;
    }
  }
}

TruncSeries TruncSeries::mul(const TruncSeries& o) const {
  if (r_ != o.r_ || maxN_ != o.maxN_ || maxM_ != o.maxM_)
    bad("series boxes differ");
  TruncSeries out(r_, maxN_, maxM_);
  for_each_degree(r_, maxN_, maxM_, [&](const Degree& d) {
    long long acc = 0;
    // e runs over the sub-box of d.
    Degree e(0, std::vector<int>(r_, 0));
    for (e.n = 0; e.n <= d.n; ++e.n) {
      std::fill(e.m.begin(), e.m.end(), 0);
      while (true) {
        acc += coeff(e) * o.coeff(d - e);
        int k = r_ - 1;
        while (k >= 0) {
          if (++e.m[k] <= d.m[k]) break;
          e.m[k] = 0;
          --k;
        }
        if (k < 0) break;
      }
    }
    out.set_coeff(d, acc);
  });
  return out;
}

bool TruncSeries::is_delta() const {
  bool ok = true;
  for_each_degree(r_, maxN_, maxM_, [&](const Degree& d) {
    const long long want = d.is_zero() ? 1 : 0;
    if (coeff(d) != want) ok = false;
  });
  return ok;
}

TruncSeries inverse_char_series(int r, int maxN, int maxM) {
  TruncSeries s(r, maxN, maxM);
  s.set_coeff(Degree(0, std::vector<int>(r, 0)), 1);
  for (int k = 1; k <= maxN; ++k)
    s.set_coeff(Degree(k, std::vector<int>(r, 0)), -1);
  // Nonempty subsets of the real colors as bit masks.
  for (unsigned long mask = 1; mask < (1ul << r); ++mask) {
    int sz = 0;
    std::vector<int> chi(r, 0);
    for (int k = 0; k < r; ++k)
      if (mask & (1ul << k)) {
        chi[k] = 1;
        ++sz;
      }
    const long long sign = (sz % 2 == 0) ? 1 : -1;
    if (maxM >= 1) s.add_coeff(Degree(0, chi), sign);
    for (int k = 1; k <= maxN; ++k) {
      if (k + 1 > maxM) break;
      std::vector<int> m(r, 0);
      for (int c = 0; c < r; ++c) m[c] = chi[c] * (k + 1);
      s.add_coeff(Degree(k, m), -sign);
    }
  }
  return s;
}

TruncSeries char_series(int r, int maxN, int maxM) {
  const TruncSeries s = inverse_char_series(r, maxN, maxM);
  TruncSeries c(r, maxN, maxM);
  for_each_degree(r, maxN, maxM, [&](const Degree& d) {
    if (d.is_zero()) {
      c.set_coeff(d, 1);
      return;
    }
    // S * C = delta and S(0) = 1 give C(d) = -sum_{0 < e <= d} S(e) C(d-e).
    long long acc = 0;
    Degree e(0, std::vector<int>(r, 0));
    for (e.n = 0; e.n <= d.n; ++e.n) {
      std::fill(e.m.begin(), e.m.end(), 0);
      while (true) {
        if (!e.is_zero()) acc += s.coeff(e) * c.coeff(d - e);
        int k = r - 1;
        while (k >= 0) {
          if (++e.m[k] <= d.m[k]) break;
          e.m[k] = 0;
          --k;
        }
        if (k < 0) break;
      }
    }
    c.set_coeff(d, -acc);
  });
  if (!s.mul(c).is_delta())
    throw std::runtime_error("character series does not invert its reciprocal");
  return c;
}

long long SteepCounter::count(const Degree& d) {
  if ((int)d.m.size() != r_) bad("degree has wrong color count");
  if (d.n < 0) return 0;
  for (int k = 0; k < r_; ++k)
    if (d.m[k] < 0) return 0;
  const auto it = memo_.find(d);
  if (it != memo_.end()) return it->second;
  long long acc = d.is_zero() ? 1 : 0;
  for (int k = 1; k <= d.n; ++k) {
    Degree e = d;
    e.n -= k;
    acc += count(e);
  }
  for (unsigned long mask = 1; mask < (1ul << r_); ++mask) {
    int sz = 0;
    std::vector<int> chi(r_, 0);
    for (int k = 0; k < r_; ++k)
      if (mask & (1ul << k)) {
        chi[k] = 1;
        ++sz;
      }
    const long long sign = (sz % 2 == 0) ? 1 : -1;
    {
      Degree e = d;
      for (int k = 0; k < r_; ++k) e.m[k] -= chi[k];
      acc -= sign * count(e);
    }
    for (int k = 1; k <= d.n; ++k) {
      Degree e = d;
      e.n -= k;
      for (int c = 0; c < r_; ++c) e.m[c] -= (k + 1) * chi[c];
      acc += sign * count(e);
    }
  }
  memo_.emplace(d, acc);
  return acc;
}

std::vector<CountRow> compare_counts(
    int r, int maxN, int maxM, const std::map<Degree, size_t>* quotient_dims) {
  const TruncSeries c = char_series(r, maxN, maxM);
  SteepCounter counter(r);
  std::vector<CountRow> rows;
  for_each_degree(r, maxN, maxM, [&](const Degree& d) {
    CountRow row;
    row.d = d;
    row.series = c.coeff(d);
    row.recursion = counter.count(d);
    row.steep = (long long)enumerate_steep(d, r).size();
    if (quotient_dims != nullptr) {
      const auto it = quotient_dims->find(d);
      if (it != quotient_dims->end()) {
        row.quotient = (long long)it->second;
        row.has_quotient = true;
      }
    }
    row.pass = row.series == row.recursion && row.series == row.steep &&
               (!row.has_quotient || row.series == row.quotient);
    rows.push_back(std::move(row));
  });
  return rows;
}

}  // namespace cometq
