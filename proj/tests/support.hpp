#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tribraid/normal_form.hpp"
#include "tribraid/word.hpp"

namespace tribraid::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Random band word with up to max_syllables syllables and |exponent| <= max_exp.
inline Word random_word(Rng& rng, int max_syllables = 6, int max_exp = 3, int max_subscript = 3) {
  std::vector<Syllable> out;
  const int n = uniform(rng, 0, max_syllables);
  for (int i = 0; i < n; ++i) {
    int e = 0;
    while (e == 0) e = uniform(rng, -max_exp, max_exp);
    out.push_back({uniform(rng, 1, max_subscript), e});
  }
  return Word(std::move(out));
}

/// Random word with exactly `letters` letters a_i^{+-1}.
inline Word random_letters(Rng& rng, int letters) {
  std::vector<Syllable> out;
  for (int i = 0; i < letters; ++i) out.push_back({uniform(rng, 1, 3), uniform(rng, 0, 1) ? 1 : -1});
  return Word(std::move(out));
}

inline NormalForm random_normal_form(Rng& rng) {
  NormalForm nf;
  nf.power = uniform(rng, -5, 5);
  const int n = uniform(rng, 0, 5);
  int sub = uniform(rng, 1, 3);
  for (int i = 0; i < n; ++i) {
    nf.tail.push_back({sub, uniform(rng, 1, 4)});
    sub = next_subscript(sub);
  }
  return nf;
}

inline Word delta() { return Word({{2, 1}, {1, 1}}); }

/// Every word of exactly n letters from {a1, a2, a3}^{+-1} (before free reduction).
inline std::vector<Word> all_letter_words(int n) {
  std::vector<Word> out;
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<Syllable> s;
    for (int k : idx) s.push_back({k / 2 + 1, k % 2 ? -1 : 1});
    out.emplace_back(std::move(s));
    int pos = 0;
    while (pos < n && ++idx[static_cast<std::size_t>(pos)] == 6) idx[static_cast<std::size_t>(pos++)] = 0;
    if (pos == n) break;
  }
  return out;
}

}  // namespace tribraid::testing
