#pragma once

#include <Eigen/Core>

#include "tribraid/laurent.hpp"
#include "tribraid/word.hpp"

namespace Eigen {

template <typename Coeff>
struct NumTraits<tribraid::LaurentPolynomial<Coeff>> : GenericNumTraits<tribraid::LaurentPolynomial<Coeff>> {
  using Real = tribraid::LaurentPolynomial<Coeff>;
  using NonInteger = tribraid::LaurentPolynomial<Coeff>;
  using Nested = tribraid::LaurentPolynomial<Coeff>;
  using Literal = tribraid::LaurentPolynomial<Coeff>;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 64
  };
};

}  // namespace Eigen

namespace tribraid {

template <typename Coeff>
using BurauMatrixT = Eigen::Matrix<LaurentPolynomial<Coeff>, 2, 2>;
using BurauMatrix = BurauMatrixT<std::int64_t>;

/// Reduced Burau image: s1 -> [[-t,1],[0,1]], s2 -> [[1,0],[t,-t]].
/// Faithful on B3, so equal matrices mean equal braids.
BurauMatrix burau(const Word& w);
BurauMatrix burau_identity();

LaurentPoly burau_trace(const BurauMatrix& m);
LaurentPoly burau_determinant(const BurauMatrix& m);

inline bool burau_equal(const BurauMatrix& a, const BurauMatrix& b) { return a == b; }

}  // namespace tribraid
