#include "cometq/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace cometq {

Degree word_degree(const Word& w, const GenTable& tab) {
  Degree d;
  d.m.assign(tab.r, 0);
  for (uint8_t id : w) {
    if (id < tab.r) {
      ++d.m[id];
    } else {
      d.n += id - tab.r + 1;
    }
  }
  return d;
}

namespace {

void enumerate(const GenTable& tab, Degree& rem, Word& acc, std::vector<Word>& out) {
  if (rem.is_zero()) {
    out.push_back(acc);
    return;
  }
  for (int id = 0; id < tab.count(); ++id) {
    if (id < tab.r) {
      if (rem.m[id] == 0) continue;
      --rem.m[id];
      acc.push_back((uint8_t)id);
      enumerate(tab, rem, acc, out);
      acc.pop_back();
      ++rem.m[id];
    } else {
      int l = id - tab.r + 1;
      if (rem.n < l) continue;
      rem.n -= l;
      acc.push_back((uint8_t)id);
      enumerate(tab, rem, acc, out);
      acc.pop_back();
      rem.n += l;
    }
  }
}

}  // namespace

std::vector<Word> words_of_degree(const QuiverParams& p, const Degree& d) {
  GenTable tab(p);
  if ((int)d.m.size() != p.r) throw std::invalid_argument("words_of_degree: wrong arity");
  Degree rem = d;
  Word acc;
  std::vector<Word> out;
  enumerate(tab, rem, acc, out);
  return out;
}

uint32_t WordList::index_of(const Word& w) const {
  auto it = std::lower_bound(words.begin(), words.end(), w);
  if (it == words.end() || *it != w) throw std::out_of_range("WordList::index_of: absent word");
  return (uint32_t)(it - words.begin());
}

}  // namespace cometq
