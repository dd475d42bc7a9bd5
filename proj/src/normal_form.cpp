#include "tribraid/normal_form.hpp"

#include <cstdlib>
#include <sstream>

namespace tribraid {

std::size_t NormalForm::tail_letters() const {
  std::size_t n = 0;
  for (const auto& s : tail) n += static_cast<std::size_t>(s.exponent);
  return n;
}

NormalFormBuilder::NormalFormBuilder(const NormalForm& nf) : power_(nf.power) {
  for (const auto& s : nf.tail)
    for (int k = 0; k < s.exponent; ++k) raw_.push_back(s.subscript);
}

void NormalFormBuilder::append_positive_letter(int subscript) {
  // a_{j+1} a_j = delta, and x delta = delta shift(x, +1).
  if (!raw_.empty() && actual(raw_.back()) == next_subscript(subscript)) {
    raw_.pop_back();
    ++power_;
    shift_tail(+1);
    return;
  }
  raw_.push_back(wrap_subscript(subscript - offset_));
}

void NormalFormBuilder::append(int subscript, int exponent) {
  if (exponent > 0) {
    for (int k = 0; k < exponent; ++k) append_positive_letter(subscript);
    return;
  }
  // a_i^-1 = delta^-1 a_{i+1}, and x delta^-1 = delta^-1 shift(x, -1).
  for (int k = 0; k < -exponent; ++k) {
    --power_;
    shift_tail(-1);
    append_positive_letter(next_subscript(subscript));
  }
}

void NormalFormBuilder::append(const Word& w) {
  for (const auto& s : w.syllables()) append(s.subscript, s.exponent);
}

NormalForm NormalFormBuilder::result() const {
  NormalForm nf;
  nf.power = power_;
  for (int raw : raw_) {
    const int sub = actual(raw);
    if (!nf.tail.empty() && nf.tail.back().subscript == sub) {
      ++nf.tail.back().exponent;
    } else {
      nf.tail.push_back({sub, 1});
    }
  }
  return nf;
}

NormalForm normalize(const Word& w) {
  NormalFormBuilder b;
  b.append(w);
  return b.result();
}

Word to_word(const NormalForm& nf) {
  std::vector<Syllable> out;
  for (int k = 0; k < std::abs(nf.power); ++k) {
    if (nf.power > 0) {
      out.push_back({2, 1});
      out.push_back({1, 1});
    } else {
      out.push_back({1, -1});
      out.push_back({2, -1});
    }
  }
  out.insert(out.end(), nf.tail.begin(), nf.tail.end());
  return Word(std::move(out));
}

bool words_equal(const Word& u, const Word& v) { return normalize(u) == normalize(v); }

bool is_normal(const NormalForm& nf) {
  for (std::size_t i = 0; i < nf.tail.size(); ++i) {
    const auto& s = nf.tail[i];
    if (s.exponent < 1 || s.subscript < 1 || s.subscript > 3) return false;
    if (i > 0 && s.subscript != next_subscript(nf.tail[i - 1].subscript)) return false;
  }
  return true;
}

std::string format_normal_form(const NormalForm& nf) {
  std::ostringstream os;
  os << "d^" << nf.power;
  for (const auto& s : nf.tail) {
    os << " a" << s.subscript;
    if (s.exponent != 1) os << '^' << s.exponent;
  }
  return os.str();
}

}  // namespace tribraid
