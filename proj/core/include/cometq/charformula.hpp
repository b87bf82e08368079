#pragma once

#include "cometq/quiver.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

namespace cometq {

// Dense truncated power series in x (imaginary weight) and y_1..y_r (real
// weights) with integer coefficients, supported on the rectangular box
// n <= maxN, m_k <= maxM for every color.
class TruncSeries {
 public:
  TruncSeries(int r, int maxN, int maxM);
  int r() const { return r_; }
  int max_n() const { return maxN_; }
  int max_m() const { return maxM_; }
  long long coeff(const Degree& d) const;
  void set_coeff(const Degree& d, long long c);
  void add_coeff(const Degree& d, long long c);
  // Truncated product on the common box (boxes must match).
  TruncSeries mul(const TruncSeries& o) const;
  // 1 at the origin and 0 everywhere else.
  bool is_delta() const;

 private:
  int r_, maxN_, maxM_;
  std::vector<long long> coef_;
  size_t index(const Degree& d) const;
};

// Visits every degree of the box, n ascending, then m lexicographic. Any
// degree componentwise below another is visited before it, so coefficient
// recursions may consume values in this order.
void for_each_degree(int r, int maxN, int maxM,
                     const std::function<void(const Degree&)>& fn);

// Closed form of the reciprocal of the crystal character:
//   +1 at (0, 0);  -1 at (k, 0) for k >= 1;
//   (-1)^|P| at (0, chi_P) and -(-1)^|P| at (k, (k+1) chi_P) for k >= 1,
// over nonempty subsets P of the real colors (chi_P = indicator vector).
TruncSeries inverse_char_series(int r, int maxN, int maxM);

// The character itself: the unique series C with S * C = 1 on the box, found
// by convolution solve; the product is re-verified before returning.
TruncSeries char_series(int r, int maxN, int maxM);

// Memoized coefficient recursion equivalent to S * C = 1, evaluated without
// a box:
//   c(d) = delta(d) + sum_{k>=1} c(n-k, m)
//        - sum_P (-1)^|P| c(n, m - chi_P)
//        + sum_{k>=1} sum_P (-1)^|P| c(n-k, m - (k+1) chi_P).
class SteepCounter {
 public:
  explicit SteepCounter(int r) : r_(r) {}
  long long count(const Degree& d);

 private:
  int r_;
  std::map<Degree, long long> memo_;
};

// One degree of the three/four-way count comparison.
struct CountRow {
  Degree d;
  long long series = 0;     // char_series coefficient
  long long recursion = 0;  // SteepCounter value
  long long steep = 0;      // brute-force enumerate_steep size
  long long quotient = -1;  // graded dimension of U^-, -1 when not supplied
  bool has_quotient = false;
  bool pass = false;
};

// Compares the independent counts at every degree of the box; quotient
// dimensions participate when supplied. pass = all present values agree.
std::vector<CountRow> compare_counts(
    int r, int maxN, int maxM,
    const std::map<Degree, size_t>* quotient_dims = nullptr);

}  // namespace cometq
