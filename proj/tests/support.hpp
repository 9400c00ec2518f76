#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "pdef/presentation.hpp"
#include "pdef/quotient.hpp"
#include "pdef/words.hpp"

namespace testing {

inline pdef::Word random_word(std::mt19937_64& rng, std::size_t alphabet,
                              std::size_t max_runs, std::int64_t max_exp) {
  std::uniform_int_distribution<std::size_t> runs(1, max_runs);
  std::uniform_int_distribution<std::uint32_t> gen(
      0, static_cast<std::uint32_t>(alphabet - 1));
  std::uniform_int_distribution<std::int64_t> exp(-max_exp, max_exp);
  for (;;) {
    std::vector<pdef::Run> rs;
    const std::size_t n = runs(rng);
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t e = 0;
      while (e == 0) {
        e = exp(rng);
      }
      rs.push_back({gen(rng), e});
    }
    pdef::Word w = pdef::Word::reduce(alphabet, rs);
    if (!w.is_identity()) {
      return w;
    }
  }
}

// Relators are random words, sometimes raised to a small power.
inline pdef::FinitePresentation random_presentation(std::mt19937_64& rng,
                                                    std::size_t alphabet,
                                                    std::size_t max_relators) {
  std::uniform_int_distribution<std::size_t> count(0, max_relators);
  std::uniform_int_distribution<std::int64_t> power(1, 6);
  std::vector<pdef::Word> rels;
  const std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) {
    rels.push_back(random_word(rng, alphabet, 3, 3).pow(power(rng)));
  }
  return pdef::FinitePresentation::with_default_names(alphabet, rels);
}

inline pdef::Permutation random_permutation(std::mt19937_64& rng,
                                            std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    img[i] = static_cast<std::uint32_t>(i);
  }
  std::shuffle(img.begin(), img.end(), rng);
  return pdef::Permutation(img);
}

}  // namespace testing
