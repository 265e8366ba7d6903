#pragma once
// Test helper: seeded random valid Wicks words via rejection sampling over
// random position pairings. Lengths start at 4; the only shorter valid word
// is the nonoriented "a a".

#include <random>
#include <stdexcept>

#include "wicks/word.hpp"

namespace wicks::testing {

// Random valid word with e letters (length 2e >= 4) of the given mode.
inline WicksWord random_valid_word(std::mt19937_64& rng, int letters, Mode mode) {
  if (letters < 2) throw std::invalid_argument("need at least 2 letters");
  const int n = 2 * letters;
  std::vector<int> positions(n);
  for (int i = 0; i < n; ++i) positions[i] = i;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::shuffle(positions.begin(), positions.end(), rng);
    std::vector<Symbol> symbols(n, 0);
    bool has_same_sign = false;
    for (int l = 1; l <= letters; ++l) {
      int p = positions[2 * l - 2], q = positions[2 * l - 1];
      int sp = rng() % 2 ? 1 : -1;
      int sq = mode == Mode::oriented ? -sp : (rng() % 2 ? 1 : -1);
      if (sp == sq) has_same_sign = true;
      symbols[p] = sp * l;
      symbols[q] = sq * l;
    }
    if (mode == Mode::nonoriented && !has_same_sign) {
      // force one same-exponent pair rather than rejecting outright
      symbols[positions[1]] = -symbols[positions[1]];
      has_same_sign = true;
    }
    WicksWord word = make_word(std::move(symbols), mode);
    if (validate(word).ok) return word;
  }
  throw std::runtime_error("random word sampling failed to converge");
}

// A random sign-respecting letter bijection, as a mapping usable with
// relabeled(): mapping[i] = signed image of letter i.
inline std::vector<Symbol> random_relabeling(std::mt19937_64& rng, int letters) {
  std::vector<Symbol> mapping(letters + 1, 0);
  std::vector<int> images(letters);
  for (int i = 0; i < letters; ++i) images[i] = i + 1;
  std::shuffle(images.begin(), images.end(), rng);
  for (int i = 1; i <= letters; ++i)
    mapping[i] = (rng() % 2 ? 1 : -1) * images[i - 1];
  return mapping;
}

}  // namespace wicks::testing
