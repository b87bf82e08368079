#pragma once

#include "cometq/quiver.hpp"

#include <cstdint>
#include <vector>

namespace cometq {

// A monomial in the free algebra: sequence of generator ids (see GenTable),
// leftmost factor first.
using Word = std::vector<uint8_t>;

Degree word_degree(const Word& w, const GenTable& tab);

// All words of the given weight over the truncated alphabet, in ascending
// lexicographic order of id sequences. Within a fixed weight no word is a
// proper prefix of another, so this is a total order, and it is preserved by
// one-sided concatenation.
std::vector<Word> words_of_degree(const QuiverParams& p, const Degree& d);

// Enumerated degree piece with O(log N) word lookup.
struct WordList {
  std::vector<Word> words;  // lex ascending

  uint32_t size() const { return (uint32_t)words.size(); }
  // Index of w; throws std::out_of_range when absent.
  uint32_t index_of(const Word& w) const;
};

}  // namespace cometq
