#pragma once

#include <random>
#include <vector>

#include "zvk/abelian.hpp"
#include "zvk/words.hpp"

namespace zvk::testing {

using Rng = std::mt19937;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Unreduced letter sequence with exponents in [-max_exp, max_exp] \ {0}.
inline std::vector<Letter> random_letters(Rng& rng, const std::vector<Symbol>& gens,
                                          int max_len, int max_exp = 1) {
  std::vector<Letter> out;
  const int len = uniform(rng, 0, max_len);
  for (int i = 0; i < len; ++i) {
    int e = uniform(rng, 1, max_exp);
    if (uniform(rng, 0, 1)) e = -e;
    out.push_back({gens[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(gens.size()) - 1))], e});
  }
  return out;
}

inline Word random_word(Rng& rng, const std::vector<Symbol>& gens, int max_len, int max_exp = 1) {
  return Word(random_letters(rng, gens, max_len, max_exp));
}

inline BraidWord random_braid(Rng& rng, int strands, int max_len) {
  std::vector<BraidLetter> letters;
  const int len = uniform(rng, 0, max_len);
  for (int i = 0; i < len; ++i) {
    letters.push_back({uniform(rng, 1, strands - 1), uniform(rng, 0, 1) ? 1 : -1});
  }
  return BraidWord(strands, letters);
}

inline IntMatrix random_matrix(Rng& rng, int max_dim, int bound) {
  const auto rows = static_cast<std::size_t>(uniform(rng, 1, max_dim));
  const auto cols = static_cast<std::size_t>(uniform(rng, 1, max_dim));
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, -bound, bound);
  }
  return m;
}

}  // namespace zvk::testing
