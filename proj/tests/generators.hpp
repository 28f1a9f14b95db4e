#pragma once

#include <random>
#include <vector>

#include "windinv/laurent.hpp"
#include "windinv/words.hpp"

namespace windinv::testgen {

using Rng = std::mt19937_64;

// Random freely reduced word of exactly `len` letters (no cancelling
// neighbors are ever generated).
inline Word random_word(Rng& rng, int len, int rank = 2) {
  std::vector<Letter> letters;
  letters.reserve(len);
  std::uniform_int_distribution<int> gen_dist(0, rank - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  while (static_cast<int>(letters.size()) < len) {
    Letter a{static_cast<std::uint8_t>(gen_dist(rng)),
             static_cast<std::int8_t>(sign_dist(rng) ? 1 : -1)};
    if (!letters.empty() && letters.back() == inverse(a)) continue;
    letters.push_back(a);
  }
  return Word(std::move(letters));
}

inline Word random_word_up_to(Rng& rng, int max_len, int rank = 2) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  return random_word(rng, len_dist(rng), rank);
}

// Random element of the commutator subgroup: a product of at most
// `max_factors` conjugates of [x,y]^{+-1} with conjugators of length at
// most `max_conjugator_len`, freely reduced. Membership is guaranteed by
// construction.
inline Word random_commutator_word(Rng& rng, int max_factors = 6, int max_conjugator_len = 6) {
  const Word base = commutator(Word::generator(0), Word::generator(1));
  std::uniform_int_distribution<int> factor_dist(1, max_factors);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  Word product;
  const int factors = factor_dist(rng);
  for (int f = 0; f < factors; ++f) {
    const Word g = random_word_up_to(rng, max_conjugator_len);
    const Word c = sign_dist(rng) ? base : invert(base);
    product = multiply(product, conjugate(g, c));
  }
  return product;
}

// As above but resampled until the reduced length fits `max_len`.
inline Word random_commutator_word_bounded(Rng& rng, int max_len) {
  while (true) {
    Word w = random_commutator_word(rng, 3, 4);
    if (static_cast<int>(w.size()) <= max_len) return w;
  }
}

inline LaurentPoly random_laurent(Rng& rng, int max_terms = 6, int exp_range = 3,
                                  int coeff_range = 9) {
  std::uniform_int_distribution<int> term_dist(0, max_terms);
  std::uniform_int_distribution<int> exp_dist(-exp_range, exp_range);
  std::uniform_int_distribution<int> coeff_dist(-coeff_range, coeff_range);
  LaurentPoly p;
  const int terms = term_dist(rng);
  for (int t = 0; t < terms; ++t) {
    p.add_term({exp_dist(rng), exp_dist(rng)}, coeff_dist(rng));
  }
  return p;
}

}  // namespace windinv::testgen
