#include "cometq/algfacts.hpp"

#include "cometq/qarith.hpp"

#include <algorithm>
#include <sstream>

namespace cometq {

namespace {

bool zero_coords(const std::vector<RatFun>& v) {
  return std::all_of(v.begin(), v.end(), [](const RatFun& x) { return x.is_zero(); });
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("verify_algebra_fact: " + what);
}

void require_arity(const std::vector<long>& params, size_t n, const std::string& fact) {
  require(params.size() == n, fact + " expects " + std::to_string(n) + " parameters");
}

Degree real_degree(const QuiverParams& p, int n, long m1, long m2 = 0) {
  std::vector<int> m(p.r, 0);
  if (p.r >= 1) m[0] = (int)m1;
  if (p.r >= 2) m[1] = (int)m2;
  return Degree(n, std::move(m));
}

// Truncated textual witness for a failing comparison.
std::string diff_witness(GradedQuotient& q, const Degree& d, const std::vector<RatFun>& lhs,
                         const std::vector<RatFun>& rhs) {
  std::vector<RatFun> diff(lhs.size());
  for (size_t i = 0; i < lhs.size(); ++i) diff[i] = lhs[i] - rhs[i];
  std::string s = "lhs - rhs = " + q.from_coords(d, diff).str(q.table()) + " at " + d.str();
  if (s.size() > 400) s = s.substr(0, 397) + "...";
  return s;
}

// All degrees e with 0 <= e <= d componentwise.
std::vector<Degree> sub_degrees(const Degree& d) {
  std::vector<Degree> out;
  Degree e(0, std::vector<int>(d.m.size(), 0));
  while (true) {
    for (e.n = 0; e.n <= d.n; ++e.n) out.push_back(e);
    size_t k = 0;
    while (k < d.m.size() && e.m[k] == d.m[k]) e.m[k++] = 0;
    if (k == d.m.size()) break;
    ++e.m[k];
  }
  return out;
}

bool fact_moving_fjs(GradedQuotient& q, long l, long n, std::string& witness) {
  const GenTable& tab = q.table();
  const QuiverParams& p = q.params();
  require(p.r >= 1 && l >= 1 && l <= p.maxLoop && n >= 0, "moving_fjs parameters out of range");
  Degree d = real_degree(p, (int)l, l + 1 + n);
  require(d.within(p), "moving_fjs degree outside the box");
  NCPoly x = NCPoly::generator(tab, Gen::loop((int)l));
  NCPoly lhs = x * divided_power_real(tab, 1, l + 1 + n);
  NCPoly rhs;
  for (long t = 0; t <= l; ++t) {
    NCPoly term = divided_power_real(tab, 1, l + 1 + n - t) * x * divided_power_real(tab, 1, t);
    RatFun c = RatFun(qbinom(l + n - t, n));
    if ((l + t) % 2 != 0) c = -c;
    term.scale(c);
    rhs += term;
  }
  auto cl = q.reduce_at(d, lhs), cr = q.reduce_at(d, rhs);
  if (cl == cr) return true;
  witness = diff_witness(q, d, cl, cr);
  return false;
}

bool fact_gen_serre(GradedQuotient& q, long a, long b, std::string& witness) {
  const QuiverParams& p = q.params();
  require(p.r >= 1 && a >= 1 && b >= 1 && a <= p.maxLoop && b <= p.maxLoop,
          "gen_serre parameters out of range");
  require(a + b <= p.maxI && a + b + 1 <= p.maxJ,
          "gen_serre needs the order-(a+b) sum inside the box");
  NCPoly xy = NCPoly::generator(q.table(), Gen::loop((int)a)) *
              NCPoly::generator(q.table(), Gen::loop((int)b));
  auto s = q.serre_order(xy, 1);
  if (s && *s <= a + b) return true;
  witness = s ? "observed order " + std::to_string(*s) : "no vanishing order found inside box";
  return false;
}

bool fact_endo_serre(GradedQuotient& q, long l, std::string& witness) {
  const QuiverParams& p = q.params();
  require(p.r >= 1 && l >= 1 && l <= p.maxLoop && l <= p.maxI && l + 1 <= p.maxJ,
          "endo_serre parameters out of range");
  auto s = q.serre_order(NCPoly::generator(q.table(), Gen::loop((int)l)), 1);
  if (s && *s == l) return true;
  witness = s ? "observed order " + std::to_string(*s) : "no vanishing order found inside box";
  return false;
}

bool fact_z_recursion(GradedQuotient& q, long l, long k, long c, std::string& witness) {
  const GenTable& tab = q.table();
  const QuiverParams& p = q.params();
  require(p.r >= 1 && l >= 1 && l <= p.maxLoop && c >= 1 && k >= 0 && k <= c,
          "z_recursion parameters out of range");
  require(real_degree(p, (int)l, c).within(p), "z_recursion degree outside the box");
  auto zc = q.z_table((int)l, (int)c);
  auto zc1 = q.z_table((int)l, (int)(c - 1));
  NCPoly zk = (k <= c - 1) ? zc1[k] : NCPoly();
  NCPoly zk1 = (k >= 1) ? zc1[k - 1] : NCPoly();
  NCPoly fj = NCPoly::generator(tab, Gen::real(1));
  NCPoly rhs = zk * fj;
  {
    NCPoly t = fj * zk;
    t.scale(RatFun(Laurent::v_pow(-l + 2 * (c - k - 1))));
    rhs -= t;
  }
  {
    NCPoly t = zk1;
    t.scale(RatFun(qint(k).shifted(-l + 2 * (c - k))));
    rhs += t;
  }
  rhs.scale(RatFun(Laurent(1), qint(c)));
  Degree dz = real_degree(p, (int)l, c - k);
  auto cl = q.reduce_at(dz, zc[k]), cr = q.reduce_at(dz, rhs);
  if (cl == cr) return true;
  witness = diff_witness(q, dz, cl, cr);
  return false;
}

bool fact_z_scaling(GradedQuotient& q, long l, long k, long c, std::string& witness) {
  const QuiverParams& p = q.params();
  require(p.r >= 1 && l >= 1 && l <= p.maxLoop && c >= 0 && k >= 0 && k <= c,
          "z_scaling parameters out of range");
  require(real_degree(p, (int)l, c).within(p), "z_scaling degree outside the box");
  NCPoly lhs = q.z_table((int)l, (int)c)[k];
  NCPoly rhs = q.z_table((int)l, (int)(c - k))[0];
  rhs.scale(RatFun(Laurent::v_pow(k * (c - k - l))));
  Degree dz = real_degree(p, (int)l, c - k);
  auto cl = q.reduce_at(dz, lhs), cr = q.reduce_at(dz, rhs);
  if (cl == cr) return true;
  witness = diff_witness(q, dz, cl, cr);
  return false;
}

bool fact_z_vanishing(GradedQuotient& q, long l, long c, std::string& witness) {
  const QuiverParams& p = q.params();
  require(p.r >= 1 && l >= 1 && l <= p.maxLoop && c > l, "z_vanishing needs c > l");
  require(real_degree(p, (int)l, c).within(p), "z_vanishing degree outside the box");
  NCPoly z0 = q.z_table((int)l, (int)c)[0];
  if (z0.is_zero()) return true;
  witness = "z_{0," + std::to_string(c) + "} = " + z0.str(q.table());
  return false;
}

bool fact_expansion(GradedQuotient& q, long l, long n, std::string& witness) {
  const GenTable& tab = q.table();
  const QuiverParams& p = q.params();
  require(p.r >= 1 && l >= 1 && l <= p.maxLoop && n >= 0, "expansion parameters out of range");
  Degree d = real_degree(p, (int)l, l + 1 + n);
  require(d.within(p), "expansion degree outside the box");
  NCPoly lhs = NCPoly::generator(tab, Gen::loop((int)l)) * divided_power_real(tab, 1, l + 1 + n);
  NCPoly rhs;
  for (long t = 0; t <= l; ++t) {
    NCPoly term = divided_power_real(tab, 1, t + n + 1) * q.z_table((int)l, (int)(l - t))[0];
    term.scale(RatFun(Laurent::v_pow(-t * (n + t + 1))));
    rhs += term;
  }
  auto cl = q.reduce_at(d, lhs), cr = q.reduce_at(d, rhs);
  if (cl == cr) return true;
  witness = diff_witness(q, d, cl, cr);
  return false;
}

bool fact_in_linfty(GradedQuotient& q, long c, std::string& witness) {
  const QuiverParams& p = q.params();
  require(p.r >= 1 && c >= 0 && c <= 1 && p.maxI >= 1, "in_linfty needs loop size 1 and c <= 1");
  Degree d = real_degree(p, 1, c);
  require(d.within(p), "in_linfty degree outside the box");
  NCPoly z0c = q.z_table(1, (int)c)[0];
  OpWord w{Gen::loop(1)};
  for (long t = 0; t < c; ++t) w.push_back(Gen::real(1));
  NCPoly img = opword_image(q, w);
  LatticeBasis L = lattice_build(q, d);
  try {
    if (lattice_equiv(q, L, z0c, img)) return true;
    witness = "not congruent modulo v^{-1} L at " + d.str();
  } catch (const std::invalid_argument& e) {
    witness = e.what();
  }
  return false;
}

bool fact_opassoc(GradedQuotient& q, long xn, long xm, long zn, long zm, std::string& witness) {
  const QuiverParams& p = q.params();
  require(p.r >= 1, "opassoc needs a real vertex");
  Degree dx = real_degree(p, (int)xn, xm), dz = real_degree(p, (int)zn, zm);
  require(dx.within(p) && dz.within(p), "opassoc degrees outside the box");
  Degree dsum = dx + dz;
  Degree dj = dsum + Gen::real(1).weight(p.r);
  require(dj.within(p), "opassoc: ftilde_j image outside the box");
  const Gen j = Gen::real(1);
  for (const Word& wx : q.basis_words(dx)) {
    NCPoly x = NCPoly::monomial(wx);
    const auto kernel = q.kernel_basis(1, dz);
    for (const auto& kv : kernel) {
      NCPoly z = q.from_coords(dz, kv);
      NCPoly xz = x * z;
      auto a = q.reduce_at(dj, q.kashiwara_f(j, xz));
      auto b = q.reduce_at(dj, q.kashiwara_f(j, x) * z);
      if (a != b) {
        witness = "ftilde_j: " + diff_witness(q, dj, a, b);
        return false;
      }
      for (int l = 1; l <= p.maxLoop; ++l) {
        Degree dl = dsum + Gen::loop(l).weight(p.r);
        if (!dl.within(p)) continue;
        auto al = q.reduce_at(dl, q.kashiwara_f(Gen::loop(l), xz));
        auto bl = q.reduce_at(dl, q.kashiwara_f(Gen::loop(l), x) * z);
        if (al != bl) {
          witness = "ftilde_(i," + std::to_string(l) + "): " + diff_witness(q, dl, al, bl);
          return false;
        }
      }
    }
  }
  return true;
}

bool fact_ftilde_commute(GradedQuotient& q, long n, long m1, long m2, std::string& witness) {
  const QuiverParams& p = q.params();
  require(p.r >= 2, "ftilde_commute needs two real colors (the only zero pairings)");
  Degree d = real_degree(p, (int)n, m1, m2);
  Degree dt = d + Gen::real(1).weight(p.r) + Gen::real(2).weight(p.r);
  require(d.within(p) && dt.within(p), "ftilde_commute degrees outside the box");
  for (const Word& w : q.basis_words(d)) {
    NCPoly u = NCPoly::monomial(w);
    auto a = q.reduce_at(dt, q.kashiwara_f(Gen::real(1), q.kashiwara_f(Gen::real(2), u)));
    auto b = q.reduce_at(dt, q.kashiwara_f(Gen::real(2), q.kashiwara_f(Gen::real(1), u)));
    if (a != b) {
      witness = diff_witness(q, dt, a, b);
      return false;
    }
  }
  return true;
}

bool fact_eprime_commute(GradedQuotient& q, long n, long m1, long m2, std::string& witness) {
  const QuiverParams& p = q.params();
  require(p.r >= 2, "eprime_commute needs two real colors");
  Degree d = real_degree(p, (int)n, m1, m2);
  require(d.within(p), "eprime_commute degree outside the box");
  for (const Word& w : q.basis_words(d)) {
    NCPoly u = NCPoly::monomial(w);
    NCPoly a = eprime_free(p, Gen::real(1), eprime_free(p, Gen::real(2), u));
    NCPoly b = eprime_free(p, Gen::real(2), eprime_free(p, Gen::real(1), u));
    NCPoly diff = a - b;
    if (diff.is_zero()) continue;
    if (!zero_coords(q.reduce(diff))) {
      witness = "on basis word " + u.str(q.table());
      return false;
    }
  }
  return true;
}

bool fact_eprime_descends(GradedQuotient& q, const Degree& d, std::string& witness) {
  const QuiverParams& p = q.params();
  require(d.within(p), "eprime_descends degree outside the box");
  for (const Relation& rel : q.relations()) {
    if (!rel.deg.leq(d)) continue;
    Degree rem = d - rel.deg;
    for (const Degree& da : sub_degrees(rem)) {
      Degree db = rem - da;
      for (const Word& wa : words_of_degree(p, da)) {
        for (const Word& wb : words_of_degree(p, db)) {
          NCPoly flanked = rel.elem.lmul(wa).rmul(wb);
          for (int gid = 0; gid < q.table().count(); ++gid) {
            NCPoly e = eprime_free(p, q.table().gen((uint8_t)gid), flanked);
            if (e.is_zero()) continue;
            if (!zero_coords(q.reduce(e))) {
              witness = "e'_" + q.table().gen((uint8_t)gid).str(p.r) + " of flanked " + rel.name +
                        " leaves the ideal at " + d.str();
              return false;
            }
          }
        }
      }
    }
  }
  return true;
}

bool fact_kj_nested(GradedQuotient& q, long n, long m1, long m2, std::string& witness) {
  const QuiverParams& p = q.params();
  require(p.r >= 2, "kj_nested needs two real colors");
  Degree d = real_degree(p, (int)n, m1, m2);
  require(d.within(p), "kj_nested degree outside the box");
  const Degree e1 = Gen::real(1).weight(p.r);
  const auto kernel2 = q.kernel_basis(2, d);
  for (const auto& kv : kernel2) {
    auto levels = q.decompose_coords(1, d, kv);
    Degree dl = d;
    for (size_t t = 0; t < levels.size(); ++t) {
      if (!zero_coords(levels[t])) {
        NCPoly zt = q.from_coords(dl, levels[t]);
        auto e = q.eprime(Gen::real(2), zt);
        if (!zero_coords(e)) {
          witness = "level " + std::to_string(t) + " leaves the second kernel at " + d.str();
          return false;
        }
      }
      dl = dl - e1;
    }
  }
  return true;
}

bool fact_decomp(GradedQuotient& q, int color, const Degree& d, std::string& witness) {
  const QuiverParams& p = q.params();
  require(color >= 1 && color <= p.r, "decomp color out of range");
  require(d.within(p), "decomp degree outside the box");
  const Degree ej = Gen::real(color).weight(p.r);
  const size_t dim = q.dim(d);
  for (size_t b = 0; b < dim; ++b) {
    std::vector<RatFun> coords(dim);
    coords[b] = RatFun(1);
    std::vector<std::vector<RatFun>> levels;
    try {
      levels = q.decompose_coords(color, d, coords);
    } catch (const std::logic_error& e) {
      witness = "direct-sum matrix degenerate at " + d.str() + ": " + e.what();
      return false;
    }
    NCPoly sum;
    Degree dl = d;
    for (size_t l = 0; l < levels.size(); ++l) {
      if (!zero_coords(levels[l])) {
        NCPoly zl = q.from_coords(dl, levels[l]);
        if (!zero_coords(q.eprime(Gen::real(color), zl))) {
          witness = "level " + std::to_string(l) + " of basis element " + std::to_string(b) +
                    " leaves the kernel at " + d.str();
          return false;
        }
        sum += divided_power_real(q.table(), color, (long)l) * zl;
      }
      dl = dl - ej;
    }
    auto back = q.reduce_at(d, sum);
    if (back != coords) {
      witness = diff_witness(q, d, back, coords);
      return false;
    }
  }
  return true;
}

bool fact_crystal_serre_lattice(GradedQuotient& q, long n, std::string& witness) {
  const QuiverParams& p = q.params();
  require(p.r >= 1 && n >= 0 && p.maxI >= 1, "crystal_serre_lattice parameters out of range");
  Degree d = real_degree(p, 1, n + 2);
  require(d.within(p), "crystal_serre_lattice degree outside the box");
  OpWord w1{Gen::loop(1)};
  for (long t = 0; t < n + 2; ++t) w1.push_back(Gen::real(1));
  OpWord w2{Gen::real(1), Gen::loop(1)};
  for (long t = 0; t < n + 1; ++t) w2.push_back(Gen::real(1));
  LatticeBasis L = lattice_build(q, d);
  try {
    if (lattice_equiv(q, L, opword_image(q, w1), opword_image(q, w2))) return true;
    witness = "operator words " + opword_str(w1, p.r) + " and " + opword_str(w2, p.r) +
              " are not congruent modulo v^{-1} L";
  } catch (const std::invalid_argument& e) {
    witness = e.what();
  }
  return false;
}

bool fact_partinL(GradedQuotient& q, long n, long m, std::string& witness) {
  const QuiverParams& p = q.params();
  require(p.r >= 1, "partinL needs a real vertex");
  Degree d = real_degree(p, (int)n, m);
  require(d.within(p), "partinL degree outside the box");
  LatticeBasis Ld = lattice_build(q, d);
  std::map<Degree, LatticeBasis> lower;
  const Degree e1 = Gen::real(1).weight(p.r);
  for (const OpWord& w : Ld.opwords) {
    NCPoly u = opword_image(q, w);
    auto levels = q.decompose_real(1, u);
    Degree dl = d;
    for (size_t t = 0; t < levels.size(); ++t) {
      if (!zero_coords(levels[t])) {
        auto it = lower.find(dl);
        if (it == lower.end()) it = lower.emplace(dl, lattice_build(q, dl)).first;
        if (!lattice_member(it->second, levels[t]).in_lattice) {
          witness = "level " + std::to_string(t) + " of " + opword_str(w, p.r) +
                    " leaves the lattice at " + dl.str();
          return false;
        }
      }
      dl = dl - e1;
    }
  }
  return true;
}

bool fact_rightmult(GradedQuotient& q, long a, long c, std::string& witness) {
  const QuiverParams& p = q.params();
  require(p.r >= 1 && a >= 0 && c >= 0 && c <= 1, "rightmult parameters out of range");
  Degree dk = real_degree(p, 1, a), dz = real_degree(p, 1, c);
  Degree ds = dk + dz;
  require(dk.within(p) && dz.within(p) && ds.within(p), "rightmult degrees outside the box");
  NCPoly z = q.z_table(1, (int)c)[0];
  LatticeBasis Lz = lattice_build(q, dz);
  if (!lattice_member(Lz, q.reduce_at(dz, z)).in_lattice) {
    witness = "z_{0," + std::to_string(c) + "} is not in the lattice at " + dz.str();
    return false;
  }
  LatticeBasis Lk = lattice_build(q, dk);
  LatticeBasis Ls = lattice_build(q, ds);
  for (const OpWord& w : Lk.opwords) {
    NCPoly prod = opword_image(q, w) * z;
    if (!lattice_member(Ls, q.reduce_at(ds, prod)).in_lattice) {
      witness = "(" + opword_str(w, p.r) + ") * z_{0," + std::to_string(c) +
                "} leaves the lattice at " + ds.str();
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::string> algebra_fact_names() {
  return {"moving_fjs",      "gen_serre",     "endo_serre",      "z_recursion",
          "z_scaling",       "z_vanishing",   "expansion",       "in_linfty",
          "opassoc",         "ftilde_commute", "eprime_commute", "eprime_descends",
          "kj_nested",       "decomp",        "crystal_serre_lattice",
          "partinL",         "rightmult"};
}

IdentityReport verify_algebra_fact(GradedQuotient& q, const std::string& fact,
                                   const std::vector<long>& params) {
  IdentityReport rep;
  rep.fact = fact;
  rep.params = params;
  std::string& w = rep.witness;
  if (fact == "moving_fjs") {
    require_arity(params, 2, fact);
    rep.pass = fact_moving_fjs(q, params[0], params[1], w);
  } else if (fact == "gen_serre") {
    require_arity(params, 2, fact);
    rep.pass = fact_gen_serre(q, params[0], params[1], w);
  } else if (fact == "endo_serre") {
    require_arity(params, 1, fact);
    rep.pass = fact_endo_serre(q, params[0], w);
  } else if (fact == "z_recursion") {
    require_arity(params, 3, fact);
    rep.pass = fact_z_recursion(q, params[0], params[1], params[2], w);
  } else if (fact == "z_scaling") {
    require_arity(params, 3, fact);
    rep.pass = fact_z_scaling(q, params[0], params[1], params[2], w);
  } else if (fact == "z_vanishing") {
    require_arity(params, 2, fact);
    rep.pass = fact_z_vanishing(q, params[0], params[1], w);
  } else if (fact == "expansion") {
    require_arity(params, 2, fact);
    rep.pass = fact_expansion(q, params[0], params[1], w);
  } else if (fact == "in_linfty") {
    require_arity(params, 1, fact);
    rep.pass = fact_in_linfty(q, params[0], w);
  } else if (fact == "opassoc") {
    require_arity(params, 4, fact);
    rep.pass = fact_opassoc(q, params[0], params[1], params[2], params[3], w);
  } else if (fact == "ftilde_commute") {
    require_arity(params, 3, fact);
    rep.pass = fact_ftilde_commute(q, params[0], params[1], params[2], w);
  } else if (fact == "eprime_commute") {
    require_arity(params, 3, fact);
    rep.pass = fact_eprime_commute(q, params[0], params[1], params[2], w);
  } else if (fact == "eprime_descends") {
    require(params.size() == 1 + (size_t)q.params().r,
            "eprime_descends expects a full degree (n, m1..mr)");
    std::vector<int> m(params.begin() + 1, params.end());
    rep.pass = fact_eprime_descends(q, Degree((int)params[0], std::move(m)), w);
  } else if (fact == "kj_nested") {
    require_arity(params, 3, fact);
    rep.pass = fact_kj_nested(q, params[0], params[1], params[2], w);
  } else if (fact == "decomp") {
    require(params.size() == 2 + (size_t)q.params().r,
            "decomp expects a color and a full degree (color, n, m1..mr)");
    std::vector<int> m(params.begin() + 2, params.end());
    rep.pass = fact_decomp(q, (int)params[0], Degree((int)params[1], std::move(m)), w);
  } else if (fact == "crystal_serre_lattice") {
    require_arity(params, 1, fact);
    rep.pass = fact_crystal_serre_lattice(q, params[0], w);
  } else if (fact == "partinL") {
    require_arity(params, 2, fact);
    rep.pass = fact_partinL(q, params[0], params[1], w);
  } else if (fact == "rightmult") {
    require_arity(params, 2, fact);
    rep.pass = fact_rightmult(q, params[0], params[1], w);
  } else {
    throw std::invalid_argument("verify_algebra_fact: unknown fact '" + fact + "'");
  }
  if (rep.pass) rep.witness.clear();
  return rep;
}

std::vector<std::vector<long>> algebra_fact_grid(const GradedQuotient& q,
                                                 const std::string& fact) {
  const QuiverParams& p = q.params();
  std::vector<std::vector<long>> g;
  const long L = std::min(p.maxLoop, p.maxI);
  if (fact == "moving_fjs" || fact == "expansion") {
    if (p.r >= 1)
      for (long l = 1; l <= L; ++l)
        for (long n = 0; l + 1 + n <= p.maxJ; ++n) g.push_back({l, n});
  } else if (fact == "gen_serre") {
    if (p.r >= 1)
      for (long a = 1; a <= p.maxLoop; ++a)
        for (long b = 1; b <= p.maxLoop; ++b)
          if (a + b <= p.maxI && a + b + 1 <= p.maxJ) g.push_back({a, b});
  } else if (fact == "endo_serre") {
    if (p.r >= 1)
      for (long l = 1; l <= L && l + 1 <= p.maxJ; ++l) g.push_back({l});
  } else if (fact == "z_recursion" || fact == "z_scaling") {
    if (p.r >= 1)
      for (long l = 1; l <= std::min(3L, L); ++l)
        for (long c = 1; c <= std::min(l + 2, (long)p.maxJ); ++c)
          for (long k = 0; k <= c; ++k) g.push_back({l, k, c});
  } else if (fact == "z_vanishing") {
    if (p.r >= 1)
      for (long l = 1; l <= std::min(3L, L); ++l)
        for (long c = l + 1; c <= std::min(l + 2, (long)p.maxJ); ++c) g.push_back({l, c});
  } else if (fact == "in_linfty") {
    if (p.r >= 1 && p.maxI >= 1)
      for (long c = 0; c <= std::min(1L, (long)p.maxJ); ++c) g.push_back({c});
  } else if (fact == "opassoc") {
    if (p.r >= 1)
      for (long xn = 0; xn <= 1; ++xn)
        for (long xm = 0; xm <= 1; ++xm)
          for (long zn = 0; zn <= 1; ++zn)
            for (long zm = 0; zm <= 1; ++zm) {
              Degree ds = real_degree(p, (int)(xn + zn), xm + zm);
              if ((ds + Gen::real(1).weight(p.r)).within(p) &&
                  (ds + Gen::loop(1).weight(p.r)).within(p))
                g.push_back({xn, xm, zn, zm});
            }
  } else if (fact == "ftilde_commute") {
    if (p.r >= 2)
      for (long n = 0; n <= 1; ++n)
        for (long m1 = 0; m1 <= 1; ++m1)
          for (long m2 = 0; m2 <= 1; ++m2)
            if (real_degree(p, (int)n, m1 + 1, m2 + 1).within(p)) g.push_back({n, m1, m2});
  } else if (fact == "eprime_commute" || fact == "kj_nested") {
    if (p.r >= 2)
      for (long n = 0; n <= p.maxI; ++n)
        for (long m1 = 0; m1 <= p.maxJ; ++m1)
          for (long m2 = 0; m2 <= p.maxJ; ++m2)
            if (n + m1 + m2 <= 4) g.push_back({n, m1, m2});
  } else if (fact == "eprime_descends") {
    Degree box((int)p.maxI, std::vector<int>(p.r, p.maxJ));
    for (const Degree& d : sub_degrees(box)) {
      if (d.total() < 2 || d.total() > 4) continue;
      std::vector<long> row{d.n};
      row.insert(row.end(), d.m.begin(), d.m.end());
      g.push_back(row);
    }
  } else if (fact == "decomp") {
    Degree box((int)p.maxI, std::vector<int>(p.r, p.maxJ));
    for (int color = 1; color <= p.r; ++color)
      for (const Degree& d : sub_degrees(box)) {
        if (d.total() > 4) continue;
        std::vector<long> row{color, d.n};
        row.insert(row.end(), d.m.begin(), d.m.end());
        g.push_back(row);
      }
  } else if (fact == "crystal_serre_lattice") {
    if (p.r >= 1 && p.maxI >= 1)
      for (long n = 0; n + 2 <= p.maxJ && n <= 2; ++n) g.push_back({n});
  } else if (fact == "partinL") {
    if (p.r >= 1)
      for (long n = 0; n <= std::min(2L, (long)p.maxI); ++n)
        for (long m = 0; m <= std::min(2L, (long)p.maxJ); ++m) g.push_back({n, m});
  } else if (fact == "rightmult") {
    if (p.r >= 1 && p.maxI >= 2)
      for (long a = 0; a <= 2; ++a)
        for (long c = 0; c <= 1; ++c)
          if (a + c <= p.maxJ) g.push_back({a, c});
  } else {
    throw std::invalid_argument("algebra_fact_grid: unknown fact '" + fact + "'");
  }
  return g;
}

}  // namespace cometq
