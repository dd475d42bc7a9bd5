#include "tribraid/word.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <utility>

namespace tribraid {

Word::Word(std::vector<Syllable> syllables) {
  syllables_.reserve(syllables.size());
  for (const auto& s : syllables) push(s);
}

void Word::push(Syllable s) {
  if (s.subscript < 1 || s.subscript > 3) throw std::invalid_argument("band subscript must be 1, 2 or 3");
  if (s.exponent == 0) return;
  if (!syllables_.empty() && syllables_.back().subscript == s.subscript) {
    syllables_.back().exponent += s.exponent;
    if (syllables_.back().exponent == 0) syllables_.pop_back();
    return;
  }
  syllables_.push_back(s);
}

std::size_t Word::letter_count() const {
  std::size_t n = 0;
  for (const auto& s : syllables_) n += static_cast<std::size_t>(std::abs(s.exponent));
  return n;
}

Word& Word::operator*=(const Word& rhs) {
  for (const auto& s : rhs.syllables_) push(s);
  return *this;
}

Word Word::pow(int n) const {
  Word base = n < 0 ? invert(*this) : *this;
  Word r;
  for (int i = 0; i < std::abs(n); ++i) r *= base;
  return r;
}

Word parse_word(std::string_view text) {
  std::vector<Syllable> out;
  enum class Seen { None, Band, Classical } seen = Seen::None;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_separators = [&] {
    while (i < n && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '.')) ++i;
  };
  skip_separators();
  while (i < n) {
    const std::size_t start = i;
    const char letter = text[i];
    if (letter != 'a' && letter != 's') throw ParseError("expected generator a1, a2, a3, s1 or s2", start);
    ++i;
    if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("expected generator index", i);
    const int index = text[i] - '0';
    ++i;
    if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("generator index out of range", start);
    const bool band = letter == 'a';
    if ((band && (index < 1 || index > 3)) || (!band && (index < 1 || index > 2)))
      throw ParseError("generator index out of range", start);
    const Seen kind = band ? Seen::Band : Seen::Classical;
    if (seen != Seen::None && seen != kind) throw ParseError("mixed band and classical alphabets", start);
    seen = kind;

    int exponent = 1;
    if (i < n && text[i] == '^') {
      ++i;
      const std::size_t num_start = i;
      if (i < n && text[i] == '-') ++i;
      if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected integer exponent", i);
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      const char* first = text.data() + num_start;
      const char* last = text.data() + i;
      if (*first == '-') {
        ++first;
      }
      int magnitude = 0;
      auto [ptr, ec] = std::from_chars(first, last, magnitude);
      if (ec != std::errc() || ptr != last) throw ParseError("exponent out of range", num_start);
      exponent = text[num_start] == '-' ? -magnitude : magnitude;
    }
    out.push_back(Syllable{index, exponent});

    if (i < n && !(std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '.' || text[i] == 'a' || text[i] == 's'))
      throw ParseError("unexpected character", i);
    skip_separators();
  }
  return Word(std::move(out));
}

namespace {

void emit(std::ostringstream& os, bool& first, char letter, int index, int exponent) {
  if (!first) os << ' ';
  first = false;
  os << letter << index;
  if (exponent != 1) os << '^' << exponent;
}

}  // namespace

std::string format_word(const Word& w, Alphabet alphabet) {
  std::ostringstream os;
  bool first = true;
  if (alphabet == Alphabet::Band) {
    for (const auto& s : w.syllables()) emit(os, first, 'a', s.subscript, s.exponent);
  } else {
    const Word classical = to_classical(w);
    for (const auto& s : classical.syllables()) emit(os, first, 's', s.subscript, s.exponent);
  }
  return os.str();
}

Word invert(const Word& w) {
  std::vector<Syllable> out(w.syllables().rbegin(), w.syllables().rend());
  for (auto& s : out) s.exponent = -s.exponent;
  return Word(std::move(out));
}

Word to_classical(const Word& w) {
  std::vector<Syllable> out;
  out.reserve(w.syllable_count() * 3);
  for (const auto& s : w.syllables()) {
    if (s.subscript == 3) {
      out.push_back({1, -1});
      out.push_back({2, s.exponent});
      out.push_back({1, 1});
    } else {
      out.push_back(s);
    }
  }
  return Word(std::move(out));
}

Word reverse(const Word& w) {
  const Word classical = to_classical(w);
  std::vector<Syllable> out(classical.syllables().rbegin(), classical.syllables().rend());
  return Word(std::move(out));
}

int exponent_sum(const Word& w) {
  int e = 0;
  for (const auto& s : w.syllables()) e += s.exponent;
  return e;
}

Permutation permutation(const Word& w) {
  // pos[k] = current position of the strand that started at position k
  Permutation pos{0, 1, 2};
  for (const auto& s : w.syllables()) {
    if (s.exponent % 2 == 0) continue;
    int a = 0;
    int b = 0;
    switch (s.subscript) {
      case 1: a = 0; b = 1; break;
      case 2: a = 1; b = 2; break;
      default: a = 0; b = 2; break;
    }
    for (auto& p : pos) {
      if (p == a) p = b;
      else if (p == b) p = a;
    }
  }
  return pos;
}

int component_count(const Word& w) {
  const Permutation p = permutation(w);
  std::array<bool, 3> seen{};
  int cycles = 0;
  for (int i = 0; i < 3; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return cycles;
}

}  // namespace tribraid
