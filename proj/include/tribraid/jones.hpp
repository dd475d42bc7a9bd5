#pragma once

#include <array>
#include <string>

#include "tribraid/laurent.hpp"
#include "tribraid/word.hpp"

namespace tribraid {

inline constexpr Indeterminate kBracketVar{'A', 1};
/// Jones polynomials are stored in half-units of t.
inline constexpr Indeterminate kJonesVar{'t', 2};

/// Element of the Temperley-Lieb algebra TL3 over Z[A, A^-1], in the
/// diagram basis {1, e1, e2, e1e2, e2e1}.
class TLElement {
 public:
  enum Basis { One = 0, E1 = 1, E2 = 2, E1E2 = 3, E2E1 = 4 };
  static constexpr int kDim = 5;

  TLElement() { coeffs_.fill(LaurentPoly(0, kBracketVar)); }
  static TLElement identity();
  static TLElement basis(Basis b);

  const LaurentPoly& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  LaurentPoly& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }

  TLElement& operator+=(const TLElement& o);
  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  friend TLElement operator*(const TLElement& a, const TLElement& b);
  friend TLElement operator*(const LaurentPoly& c, TLElement a);

  friend bool operator==(const TLElement&, const TLElement&) = default;

 private:
  std::array<LaurentPoly, kDim> coeffs_;
};

/// Loop parameter d = -A^2 - A^-2.
LaurentPoly loop_value();

/// Structure constant: basis(i) * basis(j) = coeff * basis(index).
struct TLProduct {
  LaurentPoly coeff;
  int index;
};
TLProduct tl_basis_product(int i, int j);

/// Number of closed loops in the trace closure of each basis diagram.
int closure_loops(int basis_index);

/// Kauffman skein image: s_i -> A + A^-1 e_i, s_i^-1 -> A^-1 + A e_i.
TLElement tl_image(const Word& w);

/// Markov trace of the TL image, normalized so one circle evaluates to 1.
LaurentPoly bracket_closure(const Word& w);

/// Jones polynomial of the closed 3-braid: (-A)^(-3 writhe) <w>, with t = A^-4.
LaurentPoly jones_closure(const Word& w);

/// Converts a bracket-variable polynomial (even A exponents only) to t.
LaurentPoly bracket_to_t(const LaurentPoly& in_a);

/// Closed formula for the (r, s) torus link, taken literally. Its odd
/// half-integer powers carry the opposite sqrt(t) sign to jones_closure.
LaurentPoly torus_jones_formula(int r, int s);

/// torus_jones_formula converted to the Kauffman-bracket convention used by
/// jones_closure (substitute sqrt(t) -> -sqrt(t)). Requires r, s >= 2.
LaurentPoly torus_jones(int r, int s);

/// t^(1/2) -> -t^(1/2): negates every term with an odd half-unit exponent.
LaurentPoly flip_sqrt_t(const LaurentPoly& p);

/// Mirror image: every crossing changed.
Word mirror(const Word& w);

}  // namespace tribraid
