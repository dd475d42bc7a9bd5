#pragma once

#include <string>
#include <vector>

#include "tribraid/word.hpp"

namespace tribraid {

/// delta^power * tail, where delta = a2 a1 = a3 a2 = a1 a3.
///
/// The tail is a positive word whose consecutive syllables have cyclically
/// ascending subscripts (a_i^x a_{i+1}^y), so it contains no a_{i+1} a_i and
/// hence no further factor of delta.
struct NormalForm {
  int power = 0;
  std::vector<Syllable> tail;

  std::size_t tail_letters() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

/// Incremental normal-form builder: right-multiplies letters onto a normal
/// form and restores the ascending-tail invariant after each letter.
class NormalFormBuilder {
 public:
  NormalFormBuilder() = default;
  explicit NormalFormBuilder(const NormalForm& nf);

  void append(int subscript, int exponent);
  void append(const Word& w);

  int power() const { return power_; }
  NormalForm result() const;

 private:
  void append_positive_letter(int subscript);
  void shift_tail(int amount) { offset_ += amount; }
  int actual(int raw) const { return wrap_subscript(raw + offset_); }

  int power_ = 0;
  int offset_ = 0;          // all tail subscripts are shifted by offset_
  std::vector<int> raw_;    // one entry per tail letter
};

NormalForm normalize(const Word& w);

/// delta^q expanded as (a2 a1)^q, or (a1^-1 a2^-1)^|q| for q < 0, then the tail.
Word to_word(const NormalForm& nf);

bool words_equal(const Word& u, const Word& v);

/// True iff the tail invariants hold (positive exponents, ascending subscripts).
bool is_normal(const NormalForm& nf);

/// "d^-4 a2^2 a3 a1^5 a2"
std::string format_normal_form(const NormalForm& nf);

}  // namespace tribraid
