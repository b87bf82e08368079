#include "cometq/qarith.hpp"
#include "cometq/quotient.hpp"

#include <algorithm>

namespace cometq {

namespace {

// Gauss-Jordan nullspace of a dense matrix (rows x cols) over Q(v); returns
// the canonical kernel basis (one vector per free column, ascending).
std::vector<std::vector<RatFun>> nullspace(std::vector<std::vector<RatFun>> A, size_t ncols) {
  const size_t nrows = A.size();
  std::vector<int32_t> pivrow_of_col(ncols, -1);
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < nrows; ++col) {
    size_t pr = row;
    while (pr < nrows && A[pr][col].is_zero()) ++pr;
    if (pr == nrows) continue;
    std::swap(A[pr], A[row]);
    RatFun inv = A[row][col].inv();
    for (size_t c = col; c < ncols; ++c) A[row][c] *= inv;
    for (size_t r = 0; r < nrows; ++r) {
      if (r == row || A[r][col].is_zero()) continue;
      RatFun f = A[r][col];
      for (size_t c = col; c < ncols; ++c) A[r][c] -= f * A[row][c];
    }
    pivrow_of_col[col] = (int32_t)row;
    ++row;
  }
  std::vector<std::vector<RatFun>> ker;
  for (size_t f = 0; f < ncols; ++f) {
    if (pivrow_of_col[f] >= 0) continue;
    std::vector<RatFun> v(ncols);
    v[f] = RatFun(1);
    for (size_t c = 0; c < ncols; ++c)
      if (pivrow_of_col[c] >= 0) v[c] = -A[pivrow_of_col[c]][f];
    ker.push_back(std::move(v));
  }
  return ker;
}

}  // namespace

struct GradedQuotient::DecompData {
  std::vector<std::pair<int, size_t>> block;  // (l, index into kernel basis at d - l e_j)
  std::vector<Degree> level_degree;           // degree at each l
  std::unique_ptr<DenseSolver> solver;
};

GradedQuotient::~GradedQuotient() = default;
GradedQuotient::GradedQuotient(GradedQuotient&&) noexcept = default;
GradedQuotient& GradedQuotient::operator=(GradedQuotient&&) noexcept = default;

NCPoly GradedQuotient::eprime_poly(const Gen& iota, const NCPoly& x) {
  return reduce_poly(eprime_free(p_, iota, x));
}

std::vector<RatFun> GradedQuotient::eprime(const Gen& iota, const NCPoly& x) {
  auto d = x.degree(tab_);
  if (!d) return {};
  Degree dd = *d - iota.weight(p_.r);
  if (dd.n < 0 || std::any_of(dd.m.begin(), dd.m.end(), [](int v) { return v < 0; })) return {};
  return reduce_at(dd, eprime_free(p_, iota, x));
}

const std::vector<std::vector<RatFun>>& GradedQuotient::kernel_basis(int color, const Degree& d) {
  auto key = std::make_pair(color, d);
  auto it = kernels_.find(key);
  if (it != kernels_.end()) return it->second;

  const DegreePiece& pc = piece(d);
  const size_t dim = pc.dim();
  std::vector<std::vector<RatFun>> ker;
  Degree dd = d - Gen::real(color).weight(p_.r);
  bool trivial = dd.n < 0 || std::any_of(dd.m.begin(), dd.m.end(), [](int v) { return v < 0; });
  if (trivial) {
    // e'_j vanishes identically on this degree: kernel is everything.
    for (size_t a = 0; a < dim; ++a) {
      std::vector<RatFun> v(dim);
      v[a] = RatFun(1);
      ker.push_back(std::move(v));
    }
  } else {
    const size_t ddim = this->dim(dd);
    // Constraint matrix: rows are coordinates of the target space, columns
    // index the source basis; kernel vectors are source-coordinate vectors.
    std::vector<std::vector<RatFun>> A(ddim, std::vector<RatFun>(dim));
    const Gen j = Gen::real(color);
    for (size_t a = 0; a < dim; ++a) {
      NCPoly ba = NCPoly::monomial(pc.words.words[pc.basis_cols[a]]);
      std::vector<RatFun> img = reduce_at(dd, eprime_free(p_, j, ba));
      for (size_t b = 0; b < ddim; ++b) A[b][a] = img[b];
    }
    ker = nullspace(std::move(A), dim);
  }
  return kernels_.emplace(key, std::move(ker)).first->second;
}

GradedQuotient::DecompData& GradedQuotient::decomp_data(int color, const Degree& d) {
  auto key = std::make_pair(color, d);
  auto it = decomp_.find(key);
  if (it != decomp_.end()) return *it->second;

  auto data = std::make_shared<DecompData>();
  const Degree ej = Gen::real(color).weight(p_.r);
  std::vector<std::vector<RatFun>> columns;
  Degree dl = d;
  for (int l = 0;; ++l) {
    if (dl.m[color - 1] < 0) break;
    data->level_degree.push_back(dl);
    const auto& ker = kernel_basis(color, dl);
    NCPoly fj = divided_power_real(tab_, color, l);
    for (size_t t = 0; t < ker.size(); ++t) {
      NCPoly z = from_coords(dl, ker[t]);
      columns.push_back(reduce_at(d, fj * z));
      data->block.emplace_back(l, t);
    }
    dl = dl - ej;
  }
  if (columns.size() != dim(d))
    throw std::logic_error("decompose_real: direct sum has wrong total dimension at " + d.str());
  data->solver = std::make_unique<DenseSolver>(columns);
  return *decomp_.emplace(key, std::move(data)).first->second;
}

std::vector<std::vector<RatFun>> GradedQuotient::decompose_coords(int color, const Degree& d,
                                                                  const std::vector<RatFun>& coords) {
  DecompData& data = decomp_data(color, d);
  std::vector<RatFun> a = data.solver->solve(coords);
  std::vector<std::vector<RatFun>> zs;
  for (const Degree& dl : data.level_degree) zs.emplace_back(dim(dl));
  for (size_t t = 0; t < data.block.size(); ++t) {
    if (a[t].is_zero()) continue;
    auto [l, ki] = data.block[t];
    const auto& kv = kernel_basis(color, data.level_degree[l])[ki];
    for (size_t b = 0; b < kv.size(); ++b) zs[l][b] += a[t] * kv[b];
  }
  return zs;
}

std::vector<std::vector<RatFun>> GradedQuotient::decompose_real(int color, const NCPoly& x) {
  auto d = x.degree(tab_);
  if (!d) throw std::invalid_argument("decompose_real: zero element has no degree");
  return decompose_coords(color, *d, reduce_at(*d, x));
}

std::vector<NCPoly> GradedQuotient::z_table(int l, int c, int color) {
  NCPoly x = NCPoly::generator(tab_, Gen::loop(l)) * divided_power_real(tab_, color, c);
  Degree d(l, std::vector<int>(p_.r, 0));
  d.m[color - 1] = c;
  auto zs = decompose_coords(color, d, reduce_at(d, x));
  std::vector<NCPoly> out;
  const Degree ej = Gen::real(color).weight(p_.r);
  Degree dl = d;
  for (size_t k = 0; k < zs.size(); ++k) {
    out.push_back(from_coords(dl, zs[k]));
    dl = dl - ej;
  }
  return out;
}

std::optional<long> GradedQuotient::serre_order(const NCPoly& x, int color) {
  auto d0 = x.degree(tab_);
  if (!d0) return 0;
  const Degree ej = Gen::real(color).weight(p_.r);
  for (long a = 0;; ++a) {
    Degree dt = *d0;
    for (long t = 0; t < a + 1; ++t) dt = dt + ej;
    if (!dt.within(p_)) return std::nullopt;
    NCPoly sum;
    for (long t = 0; t <= a + 1; ++t) {
      NCPoly term = divided_power_real(tab_, color, t) * x * divided_power_real(tab_, color, a + 1 - t);
      if (t % 2)
        sum -= term;
      else
        sum += term;
    }
    std::vector<RatFun> red = reduce_at(dt, sum);
    if (std::all_of(red.begin(), red.end(), [](const RatFun& f) { return f.is_zero(); })) return a;
  }
}

NCPoly GradedQuotient::kashiwara_f(const Gen& iota, const NCPoly& x) {
  if (iota.imag) return reduce_poly(NCPoly::generator(tab_, iota) * x);
  auto d = x.degree(tab_);
  if (!d) return NCPoly();
  auto zs = decompose_coords(iota.a, *d, reduce_at(*d, x));
  NCPoly y;
  const Degree ej = Gen::real(iota.a).weight(p_.r);
  Degree dl = *d;
  for (size_t l = 0; l < zs.size(); ++l) {
    NCPoly z = from_coords(dl, zs[l]);
    y += divided_power_real(tab_, iota.a, (long)l + 1) * z;
    dl = dl - ej;
  }
  return reduce_poly(y);
}

NCPoly GradedQuotient::kashiwara_e_real(int color, const NCPoly& x) {
  auto d = x.degree(tab_);
  if (!d) return NCPoly();
  auto zs = decompose_coords(color, *d, reduce_at(*d, x));
  NCPoly y;
  const Degree ej = Gen::real(color).weight(p_.r);
  Degree dl = *d;
  for (size_t l = 0; l < zs.size(); ++l) {
    if (l >= 1) {
      NCPoly z = from_coords(dl, zs[l]);
      y += divided_power_real(tab_, color, (long)l - 1) * z;
    }
    dl = dl - ej;
  }
  return reduce_poly(y);
}

}  // namespace cometq
