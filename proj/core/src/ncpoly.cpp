#include "cometq/ncpoly.hpp"

#include "cometq/qarith.hpp"

#include <sstream>

namespace cometq {

NCPoly NCPoly::monomial(const Word& w, const RatFun& c) {
  NCPoly p;
  if (!c.is_zero()) p.t_.emplace(w, c);
  return p;
}

NCPoly NCPoly::generator(const GenTable& tab, const Gen& g) {
  return monomial(Word{tab.id(g)});
}

void NCPoly::add_term(const Word& w, const RatFun& c) {
  if (c.is_zero()) return;
  auto it = t_.find(w);
  if (it == t_.end()) {
    t_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.t_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.t_) add_term(w, -c);
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly r;
  for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
  return r;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  for (const auto& [wa, ca] : a.t_)
    for (const auto& [wb, cb] : b.t_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  return r;
}

NCPoly& NCPoly::scale(const RatFun& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [w, cc] : t_) cc *= c;
  return *this;
}

NCPoly NCPoly::lmul(const Word& prefix) const {
  NCPoly r;
  for (const auto& [w, c] : t_) {
    Word ww = prefix;
    ww.insert(ww.end(), w.begin(), w.end());
    r.t_.emplace(std::move(ww), c);
  }
  return r;
}

NCPoly NCPoly::rmul(const Word& suffix) const {
  NCPoly r;
  for (const auto& [w, c] : t_) {
    Word ww = w;
    ww.insert(ww.end(), suffix.begin(), suffix.end());
    r.t_.emplace(std::move(ww), c);
  }
  return r;
}

std::optional<Degree> NCPoly::degree(const GenTable& tab) const {
  if (t_.empty()) return std::nullopt;
  Degree d = word_degree(t_.begin()->first, tab);
  for (const auto& [w, c] : t_)
    if (word_degree(w, tab) != d) throw std::domain_error("NCPoly::degree: inhomogeneous");
  return d;
}

std::string NCPoly::str(const GenTable& tab) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : t_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")*";
    if (w.empty()) os << "1";
    for (size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << tab.gen(w[i]).str(tab.r);
    first = false;
  }
  return os.str();
}

NCPoly divided_power_real(const GenTable& tab, int color, long t) {
  Word w((size_t)t, tab.id(Gen::real(color)));
  return NCPoly::monomial(w, RatFun(Laurent(1), qfact(t)));
}

std::vector<Relation> relation_set(const QuiverParams& p) {
  p.validate();
  GenTable tab(p);
  std::vector<Relation> rels;
  // Commutators of distinct real colors.
  for (int s = 1; s <= p.r; ++s)
    for (int t = s + 1; t <= p.r; ++t) {
      Word js{tab.id(Gen::real(s))}, jt{tab.id(Gen::real(t))};
      NCPoly e = NCPoly::monomial(js) * NCPoly::monomial(jt) -
                 NCPoly::monomial(jt) * NCPoly::monomial(js);
      Relation rel;
      rel.name = "comm(j" + std::to_string(s) + ",j" + std::to_string(t) + ")";
      rel.deg = Gen::real(s).weight(p.r) + Gen::real(t).weight(p.r);
      rel.elem = e;
      rel.cleared = e;
      rels.push_back(std::move(rel));
    }
  // Serre elements for each real color against each loop generator.
  for (int k = 1; k <= p.r; ++k)
    for (int l = 1; l <= p.maxLoop; ++l) {
      NCPoly e, cleared;
      NCPoly mid = NCPoly::generator(tab, Gen::loop(l));
      for (long t = 0; t <= l + 1; ++t) {
        NCPoly term = divided_power_real(tab, k, t) * mid * divided_power_real(tab, k, l + 1 - t);
        NCPoly cterm = term;
        cterm.scale(RatFun(qfact(l + 1)));
        if (t % 2) {
          e -= term;
          cleared -= cterm;
        } else {
          e += term;
          cleared += cterm;
        }
      }
      Relation rel;
      rel.name = "serre(j" + std::to_string(k) + ",(i," + std::to_string(l) + "))";
      rel.deg = Degree(l, std::vector<int>(p.r, 0));
      rel.deg.m[k - 1] = l + 1;
      rel.elem = std::move(e);
      rel.cleared = std::move(cleared);
      rels.push_back(std::move(rel));
    }
  return rels;
}

NCPoly eprime_free(const QuiverParams& p, const Gen& iota, const NCPoly& x) {
  GenTable tab(p);
  const uint8_t target = tab.id(iota);
  const Degree wiota = iota.weight(p.r);
  NCPoly r;
  for (const auto& [w, c] : x.terms()) {
    Degree prefix(0, std::vector<int>(p.r, 0));
    for (size_t t = 0; t < w.size(); ++t) {
      if (w[t] == target) {
        Word rest;
        rest.reserve(w.size() - 1);
        rest.insert(rest.end(), w.begin(), w.begin() + t);
        rest.insert(rest.end(), w.begin() + t + 1, w.end());
        long e = pairing(wiota, prefix, p.omega);
        r.add_term(rest, c * RatFun::v_pow(e));
      }
      prefix = prefix + tab.weight(w[t]);
    }
  }
  return r;
}

}  // namespace cometq
