#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tribraid {

/// Band-generator subscripts live in {1,2,3} and wrap around mod 3.
constexpr int wrap_subscript(int i) {
  int r = ((i - 1) % 3 + 3) % 3;
  return r + 1;
}
constexpr int next_subscript(int i) { return wrap_subscript(i + 1); }
constexpr int prev_subscript(int i) { return wrap_subscript(i - 1); }

/// a_i^e with e != 0. a1 = s1, a2 = s2, a3 = s1^-1 s2 s1.
struct Syllable {
  int subscript = 1;
  int exponent = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Free word in the band generators, always kept in maximal-syllable form:
/// no zero exponents and no two adjacent syllables with the same subscript.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> syllables);

  static Word generator(int subscript, int exponent = 1) { return Word({Syllable{subscript, exponent}}); }

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  std::size_t syllable_count() const { return syllables_.size(); }
  /// Number of letters, i.e. the sum of |exponent|.
  std::size_t letter_count() const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  Word pow(int n) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.syllables_ <=> b.syllables_; }

 private:
  void push(Syllable s);

  std::vector<Syllable> syllables_;
};

enum class Alphabet { Band, Classical };

Word parse_word(std::string_view text);

/// Inverse of parse_word. The classical rendering expands a3^k as s1^-1 s2^k s1.
std::string format_word(const Word& w, Alphabet alphabet = Alphabet::Band);

Word invert(const Word& w);

/// Orientation reversal: the anti-automorphism fixing s1 and s2.
Word reverse(const Word& w);

/// Rewrites every a3^k as s1^-1 s2^k s1, so the result uses subscripts 1,2 only.
Word to_classical(const Word& w);

int exponent_sum(const Word& w);

/// Permutation of strand positions, as an image table perm[i] for i in 0..2.
using Permutation = std::array<int, 3>;
Permutation permutation(const Word& w);
int component_count(const Word& w);

}  // namespace tribraid
