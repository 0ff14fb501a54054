// Words over T^n, ranked lexicographically by index sequence.
#pragma once

#include <cstdint>
#include <vector>

#include "core/common.hpp"
#include "core/structure.hpp"

namespace tgs {

using Word = std::vector<Elem>;
using WordRank = std::uint64_t;

// |T|^n, enforced against the word bound.
std::uint64_t word_space_size(const Structure& t, std::size_t n, const Bounds& bounds);

WordRank word_rank(const Structure& t, const Word& w);
Word word_unrank(const Structure& t, std::size_t n, WordRank rank);

// Number of coordinates different from the zero element.
int word_weight(const Structure& t, const Word& w);

Word word_plus(const Structure& t, const Word& u, const Word& v);
Word word_ternary(const Structure& t, const Word& u, const Word& v, const Word& w);
Word word_gamma(const Structure& t, std::size_t g, const Word& u);

// Coordinatewise absorption difference: 0 where u_i <= v_i, else u_i.
Word ominus(const Structure& t, const Word& u, const Word& v);

// Symmetric Hamming distance (count of differing coordinates).
int hamming(const Word& u, const Word& v);

// All ranks of words with weight <= w_max, ascending.
std::vector<WordRank> words_of_weight_at_most(const Structure& t, std::size_t n,
                                              int w_max, const Bounds& bounds);

}  // namespace tgs
