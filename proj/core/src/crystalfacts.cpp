#include "cometq/crystalfacts.hpp"

#include <map>
#include <stdexcept>

namespace cometq {

namespace {

void words_rec(const Degree& rem, int r, OpWord& cur, std::vector<OpWord>& out) {
  bool done = rem.n == 0;
  for (int k = 0; k < r; ++k)
    if (rem.m[k] != 0) done = false;
  if (done) {
    out.push_back(cur);
    return;
  }
  for (int k = 0; k < r; ++k) {
    if (rem.m[k] == 0) continue;
    Degree next = rem;
    next.m[k] -= 1;
    cur.push_back(Gen::real(k + 1));
    words_rec(next, r, cur, out);
    cur.pop_back();
  }
  for (int l = 1; l <= rem.n; ++l) {
    Degree next = rem;
    next.n -= l;
    cur.push_back(Gen::loop(l));
    words_rec(next, r, cur, out);
    cur.pop_back();
  }
}

std::vector<long> degree_params(const Degree& d) {
  std::vector<long> p{d.n};
  p.insert(p.end(), d.m.begin(), d.m.end());
  return p;
}

std::vector<Gen> operator_alphabet(int r, int loop_bound) {
  std::vector<Gen> gens;
  for (int k = 1; k <= r; ++k) gens.push_back(Gen::real(k));
  for (int l = 1; l <= loop_bound; ++l) gens.push_back(Gen::loop(l));
  return gens;
}

bool fact_confluence(const Degree& d, int r, std::string& witness) {
  for (const OpWord& w : all_opwords(d, r)) {
    const Steep nf = normalize(w, r);
    for (const OpWord& w2 : rewrite_neighbors(w, r)) {
      if (normalize(w2, r) != nf) {
        witness = "words '" + opword_str(w, r) + "' and '" + opword_str(w2, r) +
                  "' are one rewrite apart but normalize differently";
        return false;
      }
    }
  }
  return true;
}

bool fact_ef_identity(const Degree& d, int r, int loop_bound, std::string& witness) {
  const std::vector<Steep> all = enumerate_steep(d, r);
  for (const Gen& g : operator_alphabet(r, loop_bound)) {
    for (const Steep& b : all) {
      const Steep up = apply_f(g, b, r);
      std::optional<Steep> back;
      try {
        back = apply_e(g, up, r);
      } catch (const std::logic_error& e) {
        witness = e.what();
        return false;
      }
      if (!back || *back != b) {
        witness = "lowering " + g.str(r) + " does not undo raising on " +
                  steep_str(b, r);
        return false;
      }
    }
  }
  return true;
}

bool fact_injective(const Degree& d, int r, int loop_bound, std::string& witness) {
  const std::vector<Steep> all = enumerate_steep(d, r);
  for (const Gen& g : operator_alphabet(r, loop_bound)) {
    std::map<std::string, const Steep*> seen;
    for (const Steep& b : all) {
      const Steep up = apply_f(g, b, r);
      auto [it, fresh] = seen.emplace(steep_str(up, r), &b);
      if (!fresh) {
        witness = "raising " + g.str(r) + " sends both " + steep_str(*it->second, r) +
                  " and " + steep_str(b, r) + " to " + steep_str(up, r);
        return false;
      }
    }
  }
  return true;
}

bool fact_efast(const Degree& d, int r, std::string& witness) {
  const std::vector<Steep> all = enumerate_steep(d, r);
  for (const Steep& b : all) {
    for (int k = 1; k <= r; ++k) {
      std::optional<Steep> slow;
      try {
        slow = apply_e(Gen::real(k), b, r);
      } catch (const std::logic_error& e) {
        witness = e.what();
        return false;
      }
      const std::optional<Steep> fast = apply_e_real_fast(k, b);
      if (slow.has_value() != fast.has_value() ||
          (slow.has_value() && *slow != *fast)) {
        witness = "fast and brute-force lowering of color " + std::to_string(k) +
                  " disagree on " + steep_str(b, r);
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<OpWord> all_opwords(const Degree& d, int r) {
  if ((int)d.m.size() != r)
    throw std::invalid_argument("degree has wrong color count");
  std::vector<OpWord> out;
  if (d.n < 0) return out;
  for (int k = 0; k < r; ++k)
    if (d.m[k] < 0) return out;
  OpWord cur;
  words_rec(d, r, cur, out);
  return out;
}

std::vector<OpWord> rewrite_neighbors(const OpWord& w, int r) {
  std::vector<OpWord> out;
  for (size_t t = 0; t + 1 < w.size(); ++t) {
    const Gen& a = w[t];
    const Gen& b = w[t + 1];
    if (!a.imag && !b.imag && a.a != b.a) {
      OpWord w2 = w;
      std::swap(w2[t], w2[t + 1]);
      out.push_back(std::move(w2));
    }
  }
  auto run_of = [&](size_t from, int color, int len) {
    if (from + (size_t)len > w.size()) return false;
    for (int q = 0; q < len; ++q) {
      const Gen& g = w[from + (size_t)q];
      if (g.imag || g.a != color) return false;
    }
    return true;
  };
  for (size_t t = 0; t < w.size(); ++t) {
    if (w[t].imag) {
      // (i,c) j^(c+1) ... -> j (i,c) j^c ...
      const int c = w[t].a;
      for (int color = 1; color <= r; ++color) {
        if (!run_of(t + 1, color, c + 1)) continue;
        OpWord w2 = w;
        w2[t] = Gen::real(color);
        w2[t + 1] = Gen::loop(c);
        out.push_back(std::move(w2));
      }
    } else if (t + 1 < w.size() && w[t + 1].imag) {
      // j (i,c) j^c ... -> (i,c) j^(c+1) ...
      const int c = w[t + 1].a;
      const int color = w[t].a;
      if (!run_of(t + 2, color, c)) continue;
      OpWord w2 = w;
      w2[t] = Gen::loop(c);
      w2[t + 1] = Gen::real(color);
      out.push_back(std::move(w2));
    }
  }
  return out;
}

std::vector<std::string> crystal_fact_names() {
  return {"confluence", "ef_identity", "injective", "efast"};
}

IdentityReport verify_crystal_fact(const std::string& fact, const Degree& d,
                                   int r, int loop_bound) {
  if ((int)d.m.size() != r)
    throw std::invalid_argument("verify_crystal_fact: degree has wrong color count");
  if (loop_bound < 1)
    throw std::invalid_argument("verify_crystal_fact: loop bound must be >= 1");
  IdentityReport rep;
  rep.fact = "crystal_" + fact;
  rep.params = degree_params(d);
  if (fact == "confluence") {
    rep.pass = fact_confluence(d, r, rep.witness);
  } else if (fact == "ef_identity") {
    rep.pass = fact_ef_identity(d, r, loop_bound, rep.witness);
  } else if (fact == "injective") {
    rep.pass = fact_injective(d, r, loop_bound, rep.witness);
  } else if (fact == "efast") {
    rep.pass = fact_efast(d, r, rep.witness);
  } else {
    throw std::invalid_argument("verify_crystal_fact: unknown fact '" + fact + "'");
  }
  if (rep.pass) rep.witness.clear();
  return rep;
}

std::vector<IdentityReport> crystal_coherence(int r, int bound) {
  std::vector<IdentityReport> out;
  Degree d(0, std::vector<int>(r, 0));
  for (d.n = 0; d.n <= bound; ++d.n) {
    std::fill(d.m.begin(), d.m.end(), 0);
    while (true) {
      for (const std::string& fact : crystal_fact_names())
        out.push_back(verify_crystal_fact(fact, d, r, bound < 1 ? 1 : bound));
      int k = r - 1;
      while (k >= 0) {
        if (++d.m[k] <= bound) break;
        d.m[k] = 0;
        --k;
      }
      if (k < 0) break;
    }
  }
  return out;
}

}  // namespace cometq
