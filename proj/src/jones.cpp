#include "tribraid/jones.hpp"

#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "tribraid/errors.hpp"

namespace tribraid {

namespace {

LaurentPoly a_mono(std::int64_t c, int k) { return LaurentPoly::monomial(c, k, kBracketVar); }

const std::array<std::string, TLElement::kDim> kBasisWords = {"", "1", "2", "12", "21"};

// Reduce a word in e1, e2 with e_i e_i = d e_i and e_i e_j e_i = e_i.
TLProduct reduce(std::string word) {
  int loops = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] == word[i + 1]) {
        word.erase(i, 1);
        ++loops;
        changed = true;
        break;
      }
      if (i + 2 < word.size() && word[i] == word[i + 2]) {
        word.erase(i + 1, 2);
        changed = true;
        break;
      }
    }
  }
  for (int b = 0; b < TLElement::kDim; ++b)
    if (kBasisWords[static_cast<std::size_t>(b)] == word)
      return {loop_value().pow(static_cast<unsigned>(loops)), b};
  throw std::logic_error("TL3 reduction left a non-basis word: " + word);
}

const std::array<std::array<TLProduct, TLElement::kDim>, TLElement::kDim>& product_table() {
  static const auto table = [] {
    std::array<std::array<TLProduct, TLElement::kDim>, TLElement::kDim> t{};
    for (int i = 0; i < TLElement::kDim; ++i)
      for (int j = 0; j < TLElement::kDim; ++j)
        t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            reduce(kBasisWords[static_cast<std::size_t>(i)] + kBasisWords[static_cast<std::size_t>(j)]);
    return t;
  }();
  return table;
}

TLElement crossing(int i, bool inverse) {
  TLElement x;
  x[TLElement::One] = a_mono(1, inverse ? -1 : 1);
  x[i == 1 ? TLElement::E1 : TLElement::E2] = a_mono(1, inverse ? 1 : -1);
  return x;
}

}  // namespace

LaurentPoly loop_value() { return a_mono(-1, 2) + a_mono(-1, -2); }

TLProduct tl_basis_product(int i, int j) { return product_table()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

int closure_loops(int basis_index) {
  static constexpr std::array<int, TLElement::kDim> loops{3, 2, 2, 1, 1};
  return loops[static_cast<std::size_t>(basis_index)];
}

TLElement TLElement::identity() { return basis(One); }

TLElement TLElement::basis(Basis b) {
  TLElement x;
  x[b] = a_mono(1, 0);
  return x;
}

TLElement& TLElement::operator+=(const TLElement& o) {
  for (int i = 0; i < kDim; ++i) (*this)[i] += o[i];
  return *this;
}

TLElement operator*(const TLElement& a, const TLElement& b) {
  TLElement r;
  for (int i = 0; i < TLElement::kDim; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < TLElement::kDim; ++j) {
      if (b[j].is_zero()) continue;
      const TLProduct& p = tl_basis_product(i, j);
      r[p.index] += a[i] * b[j] * p.coeff;
    }
  }
  return r;
}

TLElement operator*(const LaurentPoly& c, TLElement a) {
  for (auto& x : a.coeffs_) x = c * x;
  return a;
}

TLElement tl_image(const Word& w) {
  TLElement acc = TLElement::identity();
  const Word classical = to_classical(w);
  for (const auto& s : classical.syllables()) {
    const TLElement g = crossing(s.subscript, s.exponent < 0);
    for (int k = 0; k < std::abs(s.exponent); ++k) acc = acc * g;
  }
  return acc;
}

LaurentPoly bracket_closure(const Word& w) {
  const TLElement x = tl_image(w);
  const LaurentPoly d = loop_value();
  LaurentPoly sum(0, kBracketVar);
  for (int i = 0; i < TLElement::kDim; ++i) sum += x[i] * d.pow(static_cast<unsigned>(closure_loops(i) - 1));
  return sum;
}

LaurentPoly bracket_to_t(const LaurentPoly& in_a) {
  // A^k = t^(-k/4) = half-unit key -k/2
  LaurentPoly out(0, kJonesVar);
  for (const auto& [k, c] : in_a.terms()) {
    if (k % 2 != 0) throw std::domain_error("bracket has an odd power of A; not a link polynomial");
    out += LaurentPoly::monomial(c, -k / 2, kJonesVar);
  }
  return out;
}

LaurentPoly jones_closure(const Word& w) {
  const int writhe = exponent_sum(w);
  const int k = -3 * writhe;
  const LaurentPoly norm = a_mono(k % 2 == 0 ? 1 : -1, k);  // (-A)^k
  return bracket_to_t(norm * bracket_closure(w));
}

LaurentPoly torus_jones_formula(int r, int s) {
  if (r < 2 || s < 2) throw PreconditionError("torus_jones requires r, s >= 2");
  const std::int64_t n = std::gcd(r, s);
  const std::int64_t rn = r / n;
  const std::int64_t sn = s / n;
  auto half_units = [](std::int64_t num, std::int64_t den) {
    // exponent num/den, returned in half-units; must be a half-integer
    if ((2 * num) % den != 0) throw std::logic_error("torus_jones: exponent is not a half-integer");
    return static_cast<int>(2 * num / den);
  };

  LaurentPoly sum(0, kJonesVar);
  std::int64_t binom = 1;
  for (std::int64_t l = 0; l <= n; ++l) {
    const int base = half_units(rn * (n - l) * (1 + sn * l), 1);  // (r/n)(n-l)(1 + (s/n) l)
    const int a = half_units((n - l) * s, n);               // (n-l) s/n
    const int b = half_units(n + l * s, n);                 // 1 + l s/n
    sum += LaurentPoly::monomial(binom, base + a, kJonesVar);
    sum -= LaurentPoly::monomial(binom, base + b, kJonesVar);
    binom = binom * (n - l) / (l + 1);
  }
  const LaurentPoly one_minus_t2 = LaurentPoly::monomial(1, 0, kJonesVar) - LaurentPoly::monomial(1, 4, kJonesVar);
  const LaurentPoly quotient = sum.exact_divide(one_minus_t2);
  const int prefactor = half_units(static_cast<std::int64_t>(r - 1) * (s - 1), 2);
  return LaurentPoly::monomial(1, prefactor, kJonesVar) * quotient;
}

LaurentPoly flip_sqrt_t(const LaurentPoly& p) {
  LaurentPoly out(0, p.variable());
  for (const auto& [k, c] : p.terms()) out += LaurentPoly::monomial(k % 2 == 0 ? c : -c, k, p.variable());
  return out;
}

LaurentPoly torus_jones(int r, int s) { return flip_sqrt_t(torus_jones_formula(r, s)); }

Word mirror(const Word& w) {
  std::vector<Syllable> out = to_classical(w).syllables();
  for (auto& s : out) s.exponent = -s.exponent;
  return Word(std::move(out));
}

}  // namespace tribraid
