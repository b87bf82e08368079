#include "cometq/lattice.hpp"

#include <algorithm>

namespace cometq {

NCPoly opword_image(GradedQuotient& q, const OpWord& w) {
  NCPoly x = NCPoly::unit();
  for (auto it = w.rbegin(); it != w.rend(); ++it) x = q.kashiwara_f(*it, x);
  return x;
}

namespace {

void enum_rec(const QuiverParams& p, const Degree& d, bool permissive, OpWord& cur,
              std::vector<OpWord>& out) {
  if (d.is_zero()) {
    out.push_back(cur);
    return;
  }
  for (int c = 1; c <= p.r; ++c) {
    if (d.m[c - 1] == 0) continue;
    Degree dd = d;
    dd.m[c - 1] -= 1;
    cur.push_back(Gen::real(c));
    enum_rec(p, dd, permissive, cur, out);
    cur.pop_back();
  }
  const int lmax = permissive ? std::min(p.maxLoop, d.n) : std::min(1, d.n);
  for (int l = 1; l <= lmax; ++l) {
    Degree dd = d;
    dd.n -= l;
    cur.push_back(Gen::loop(l));
    enum_rec(p, dd, permissive, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<OpWord> enumerate_opwords(const QuiverParams& p, const Degree& d, bool permissive) {
  std::vector<OpWord> out;
  OpWord cur;
  enum_rec(p, d, permissive, cur, out);
  return out;
}

LatticeBasis lattice_build(GradedQuotient& q, const Degree& d, bool permissive) {
  LatticeBasis L;
  L.d = d;
  L.ncoords = q.dim(d);
  L.opwords = enumerate_opwords(q.params(), d, permissive);

  // Generator columns, deduplicated (commuting operators repeat images).
  std::vector<std::vector<RatFun>> work;
  for (const OpWord& w : L.opwords) {
    std::vector<RatFun> col = q.reduce_at(d, opword_image(q, w));
    bool zero = std::all_of(col.begin(), col.end(), [](const RatFun& x) { return x.is_zero(); });
    if (zero) continue;
    bool dup = false;
    for (const auto& u : work)
      if (u == col) {
        dup = true;
        break;
      }
    if (!dup) work.push_back(std::move(col));
  }

  std::vector<char> alive(work.size(), 1);
  while (true) {
    // Valuation-greedy pivot: entry of maximal order among live columns;
    // ties broken by smallest column, then smallest coordinate, so the
    // result is deterministic.
    bool found = false;
    long best = 0;
    size_t bc = 0, br = 0;
    for (size_t c = 0; c < work.size(); ++c) {
      if (!alive[c]) continue;
      for (size_t rr = 0; rr < L.ncoords; ++rr) {
        auto o = work[c][rr].order();
        if (!o) continue;
        if (!found || *o > best) {
          found = true;
          best = *o;
          bc = c;
          br = rr;
        }
      }
    }
    if (!found) break;

    // Clear the pivot row from every other live column. Each coefficient has
    // order <= 0, i.e. lies in A, so the span over A is unchanged.
    const std::vector<RatFun> pivot_col = work[bc];
    const RatFun& pv = pivot_col[br];
    for (size_t c = 0; c < work.size(); ++c) {
      if (!alive[c] || c == bc) continue;
      if (work[c][br].is_zero()) continue;
      RatFun coef = work[c][br] / pv;
      for (size_t rr = 0; rr < L.ncoords; ++rr) work[c][rr] -= coef * pivot_col[rr];
    }
    alive[bc] = 0;
    L.cols.push_back(pivot_col);
    L.pivots.push_back(br);
  }
  return L;
}

LatticeMembership lattice_member(const LatticeBasis& L, const std::vector<RatFun>& x) {
  if (x.size() != L.ncoords) throw std::invalid_argument("lattice_member: coordinate size mismatch");
  LatticeMembership m;
  std::vector<RatFun> res = x;
  std::vector<RatFun> coeffs(L.cols.size());
  // Column k is the only one with a nonzero entry at pivot row k among
  // columns k..end, and columns k+1.. are zero at pivot rows 0..k, so the
  // coefficients peel off in order.
  for (size_t k = 0; k < L.cols.size(); ++k) {
    const size_t pr = L.pivots[k];
    if (res[pr].is_zero()) continue;
    coeffs[k] = res[pr] / L.cols[k][pr];
    for (size_t rr = 0; rr < L.ncoords; ++rr) res[rr] -= coeffs[k] * L.cols[k][rr];
  }
  m.in_span =
      std::all_of(res.begin(), res.end(), [](const RatFun& t) { return t.is_zero(); });
  if (!m.in_span) return m;
  m.coeffs = std::move(coeffs);
  m.in_lattice = std::all_of(m.coeffs.begin(), m.coeffs.end(),
                             [](const RatFun& t) { return t.regular_at_vinv(); });
  m.in_vinv = std::all_of(m.coeffs.begin(), m.coeffs.end(),
                          [](const RatFun& t) { return t.in_vinv_ideal(); });
  return m;
}

bool lattice_equiv(const LatticeBasis& L, const std::vector<RatFun>& x,
                   const std::vector<RatFun>& y) {
  LatticeMembership mx = lattice_member(L, x);
  if (!mx.in_lattice)
    throw std::invalid_argument("lattice_equiv: first argument is outside the lattice at " +
                                L.d.str());
  LatticeMembership my = lattice_member(L, y);
  if (!my.in_lattice)
    throw std::invalid_argument("lattice_equiv: second argument is outside the lattice at " +
                                L.d.str());
  std::vector<RatFun> diff(x.size());
  for (size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - y[i];
  return lattice_member(L, diff).in_vinv;
}

bool lattice_equiv(GradedQuotient& q, const LatticeBasis& L, const NCPoly& x, const NCPoly& y) {
  return lattice_equiv(L, q.reduce_at(L.d, x), q.reduce_at(L.d, y));
}

}  // namespace cometq
