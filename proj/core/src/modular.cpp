#include "cometq/modular.hpp"

#include "cometq/qarith.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <sstream>

namespace cometq {

FpField::Elem FpField::pow(Elem a, uint64_t e) const {
  Elem r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FpField::Elem FpField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("FpField::inv(0)");
  return pow(a, p - 2);
}

FpField::Elem FpField::eval(const Laurent& f, Elem alpha) const {
  Elem acc = 0;
  const Elem ainv = inv(alpha);
  for (const auto& [e, c] : f.terms()) {
    // c = num/den with den > 0 after GMP canonicalization.
    uint64_t num = mpz_fdiv_ui(c.get_num().get_mpz_t(), p);
    uint64_t den = mpz_fdiv_ui(c.get_den().get_mpz_t(), p);
    if (den == 0) throw std::domain_error("FpField::eval: denominator divisible by p");
    Elem coef = mul(num, inv(den));
    Elem ve = e >= 0 ? pow(alpha, (uint64_t)e) : pow(ainv, (uint64_t)(-e));
    acc = add(acc, mul(coef, ve));
  }
  return acc;
}

namespace {

struct TowerPiece {
  WordList words;
  std::unique_ptr<Echelon<FpField>> ech;
  // Basis words persist for the whole run (relation rows at any higher degree
  // flank against them); the echelon and full word list are freed once every
  // one-generator successor has consumed them.
  std::vector<Word> basis_words;
  int pending_successors = 0;
};

std::vector<Degree> box_degrees(const QuiverParams& p) {
  std::vector<Degree> all;
  std::vector<int> m(p.r, 0);
  // Odometer over the box, then sort by total degree so predecessors come
  // first.
  while (true) {
    for (int n = 0; n <= p.maxI; ++n) all.emplace_back(n, m);
    int k = 0;
    while (k < p.r && m[k] == p.maxJ) m[k++] = 0;
    if (k == p.r) break;
    ++m[k];
  }
  std::stable_sort(all.begin(), all.end(), [](const Degree& a, const Degree& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a < b;
  });
  return all;
}

}  // namespace

std::map<Degree, size_t> modular_dims_tower(const QuiverParams& p, uint64_t prime, uint64_t alpha) {
  p.validate();
  const GenTable tab(p);
  const FpField F{prime};
  const auto rels = relation_set(p);

  // Pre-evaluate relation coefficients at v = alpha.
  struct FpRel {
    Degree deg;
    std::vector<std::pair<Word, uint64_t>> terms;
  };
  std::vector<FpRel> fprels;
  for (const Relation& rel : rels) {
    FpRel fr;
    fr.deg = rel.deg;
    for (const auto& [w, c] : rel.cleared.terms()) {
      uint64_t x = F.eval(c.as_laurent(), alpha);
      if (x) fr.terms.emplace_back(w, x);
    }
    fprels.push_back(std::move(fr));
  }

  std::map<Degree, TowerPiece> pieces;
  std::map<Degree, size_t> dims;
  const std::vector<Degree> order = box_degrees(p);

  // Reference counts: a piece may be freed once every in-box successor
  // (one more generator) has been built.
  for (const Degree& d : order) {
    TowerPiece& tp = pieces[d];
    tp.pending_successors = 0;
    for (int gid = 0; gid < tab.count(); ++gid) {
      Degree up = d + tab.weight((uint8_t)gid);
      if (up.within(p)) ++tp.pending_successors;
    }
  }

  for (const Degree& d : order) {
    TowerPiece& tp = pieces.at(d);
    tp.words.words = words_of_degree(p, d);
    const uint32_t n = tp.words.size();
    tp.ech = std::make_unique<Echelon<FpField>>(F, n);

    // Relation rows against lower basis words.
    for (const FpRel& rel : fprels) {
      if (!rel.deg.leq(d)) continue;
      const TowerPiece& prev = pieces.at(d - rel.deg);
      for (const Word& b : prev.basis_words) {
        SparseRow<FpField> row;
        row.e.reserve(rel.terms.size());
        for (const auto& [w, c] : rel.terms) {
          Word ww = w;
          ww.insert(ww.end(), b.begin(), b.end());
          row.e.emplace_back(tp.words.index_of(ww), c);
        }
        std::sort(row.e.begin(), row.e.end(),
                  [](const auto& a, const auto& b2) { return a.first > b2.first; });
        tp.ech->insert(row);
      }
    }
    // Left tower rows.
    for (int gid = 0; gid < tab.count(); ++gid) {
      Degree wg = tab.weight((uint8_t)gid);
      if (!wg.leq(d)) continue;
      const TowerPiece& prev = pieces.at(d - wg);
      std::vector<uint32_t> remap(prev.words.size());
      for (uint32_t idx = 0; idx < prev.words.size(); ++idx) {
        Word w;
        w.reserve(prev.words.words[idx].size() + 1);
        w.push_back((uint8_t)gid);
        w.insert(w.end(), prev.words.words[idx].begin(), prev.words.words[idx].end());
        remap[idx] = tp.words.index_of(w);
      }
      for (size_t ri = 0; ri < prev.ech->rank(); ++ri) {
        SparseRow<FpField> row;
        row.e.reserve(prev.ech->row(ri).e.size());
        for (const auto& [c, x] : prev.ech->row(ri).e) row.e.emplace_back(remap[c], x);
        tp.ech->insert(row);
      }
    }

    for (uint32_t bc : tp.ech->basis_cols()) tp.basis_words.push_back(tp.words.words[bc]);
    dims[d] = tp.basis_words.size();

    // Release predecessors that no longer feed left-tower rows.
    for (int gid = 0; gid < tab.count(); ++gid) {
      Degree wg = tab.weight((uint8_t)gid);
      if (!wg.leq(d)) continue;
      TowerPiece& prev = pieces.at(d - wg);
      if (--prev.pending_successors == 0) {
        prev.ech.reset();
        prev.words.words.clear();
        prev.words.words.shrink_to_fit();
      }
    }
  }
  return dims;
}

namespace {

// Deterministic alpha for tower t: avoids points where any [n] with
// n <= maxLoop+1 vanishes (those would degrade cleared Serre rows).
uint64_t pick_alpha(const QuiverParams& p, const FpField& F, uint64_t seed, int tower) {
  std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * (uint64_t)(tower + 1));
  for (int tries = 0; tries < 1000; ++tries) {
    uint64_t a = 2 + rng() % (F.p - 3);
    bool ok = true;
    for (int nn = 1; nn <= p.maxLoop + 1 && ok; ++nn)
      if (F.eval(qint(nn), a) == 0 || F.eval(qfact(nn), a) == 0) ok = false;
    if (ok) return a;
  }
  throw std::runtime_error("pick_alpha: no admissible evaluation point found");
}

}  // namespace

DimsTable dimension_table(const QuiverParams& p, const DimsOptions& opt) {
  p.validate();
  static const uint64_t primes[] = {2147483647ULL, 2147483629ULL, 2147483587ULL,
                                    2147483579ULL, 2147483563ULL};
  if (opt.specializations < 1 || opt.specializations > 5)
    throw std::invalid_argument("dimension_table: specializations must be 1..5");

  DimsTable out;
  for (int t = 0; t < opt.specializations; ++t) {
    FpField F{primes[t]};
    uint64_t alpha = pick_alpha(p, F, opt.seed, t);
    std::map<Degree, size_t> dims = modular_dims_tower(p, primes[t], alpha);
    if (t == 0) {
      for (const auto& [d, v] : dims) {
        out.dim[d] = v;
        out.modular_only[d] = true;
      }
    } else if (dims != out.dim) {
      throw std::runtime_error("dimension_table: specialization towers disagree");
    }
  }

  // Exact confirmation wherever the degree fits the exact-tier guard.
  GradedQuotient q(p, opt.exact_word_limit);
  for (auto& [d, v] : out.dim) {
    if (words_of_degree(p, d).size() > opt.exact_word_limit) continue;
    size_t ed = q.dim(d);
    if (ed != v) {
      std::ostringstream os;
      os << "dimension_table: exact tier " << ed << " != modular tier " << v << " at " << d.str();
      throw std::runtime_error(os.str());
    }
    out.modular_only[d] = false;
  }
  return out;
}

}  // namespace cometq
