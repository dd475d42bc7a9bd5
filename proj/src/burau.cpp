#include "tribraid/burau.hpp"

#include <cstdlib>

namespace tribraid {

namespace {

constexpr Indeterminate kT{'t', 1};

LaurentPoly mono(std::int64_t c, int k) { return LaurentPoly::monomial(c, k, kT); }

BurauMatrix sigma(int i, bool inverse) {
  BurauMatrix m;
  if (i == 1) {
    if (!inverse) m << mono(-1, 1), mono(1, 0), mono(0, 0), mono(1, 0);
    else m << mono(-1, -1), mono(1, -1), mono(0, 0), mono(1, 0);
  } else {
    if (!inverse) m << mono(1, 0), mono(0, 0), mono(1, 1), mono(-1, 1);
    else m << mono(1, 0), mono(0, 0), mono(1, 0), mono(-1, -1);
  }
  return m;
}

BurauMatrix generator(int subscript, bool inverse) {
  if (subscript != 3) return sigma(subscript, inverse);
  // a3 = s1^-1 s2 s1, a3^-1 = s1^-1 s2^-1 s1
  BurauMatrix r = sigma(1, true) * sigma(2, inverse);
  return r * sigma(1, false);
}

}  // namespace

BurauMatrix burau_identity() {
  BurauMatrix m;
  m << mono(1, 0), mono(0, 0), mono(0, 0), mono(1, 0);
  return m;
}

BurauMatrix burau(const Word& w) {
  BurauMatrix acc = burau_identity();
  for (const auto& s : w.syllables()) {
    const BurauMatrix g = generator(s.subscript, s.exponent < 0);
    for (int k = 0; k < std::abs(s.exponent); ++k) {
      BurauMatrix next = acc * g;
      acc = next;
    }
  }
  return acc;
}

LaurentPoly burau_trace(const BurauMatrix& m) { return m(0, 0) + m(1, 1); }

LaurentPoly burau_determinant(const BurauMatrix& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

}  // namespace tribraid
