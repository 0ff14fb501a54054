#include "core/words.hpp"

namespace tgs {

std::uint64_t word_space_size(const Structure& t, std::size_t n, const Bounds& bounds) {
  if (n == 0) throw Error(ErrorKind::Usage, "word length must be at least 1");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= t.size();
    if (total > bounds.max_words)
      throw Error(ErrorKind::Bounds,
                  "word space |T|^" + std::to_string(n) + " exceeds the word bound " +
                      std::to_string(bounds.max_words) + " (raise with bounds words=...)");
  }
  return total;
}

WordRank word_rank(const Structure& t, const Word& w) {
  WordRank rank = 0;
  for (Elem c : w) rank = rank * t.size() + c;
  return rank;
}

Word word_unrank(const Structure& t, std::size_t n, WordRank rank) {
  Word w(n);
  for (std::size_t i = n; i-- > 0;) {
    w[i] = Elem(rank % t.size());
    rank /= t.size();
  }
  return w;
}

int word_weight(const Structure& t, const Word& w) {
  int weight = 0;
  for (Elem c : w)
    if (c != t.zero()) ++weight;
  return weight;
}

Word word_plus(const Structure& t, const Word& u, const Word& v) {
  Word out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = t.plus(u[i], v[i]);
  return out;
}

Word word_ternary(const Structure& t, const Word& u, const Word& v, const Word& w) {
  Word out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = t.ternary(u[i], v[i], w[i]);
  return out;
}

Word word_gamma(const Structure& t, std::size_t g, const Word& u) {
  Word out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = t.gamma(g, u[i]);
  return out;
}

Word ominus(const Structure& t, const Word& u, const Word& v) {
  Word out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    out[i] = t.leq(u[i], v[i]) ? t.zero() : u[i];
  return out;
}

int hamming(const Word& u, const Word& v) {
  int distance = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != v[i]) ++distance;
  return distance;
}

std::vector<WordRank> words_of_weight_at_most(const Structure& t, std::size_t n,
                                              int w_max, const Bounds& bounds) {
  const std::uint64_t total = word_space_size(t, n, bounds);
  std::vector<WordRank> out;
  for (WordRank r = 0; r < total; ++r)
    if (word_weight(t, word_unrank(t, n, r)) <= w_max) out.push_back(r);
  return out;
}

}  // namespace tgs
