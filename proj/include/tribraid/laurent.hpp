#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

namespace tribraid {

// A Laurent monomial variable. Stored exponents are integers; the real
// exponent is key / denominator, so t^(1/2) is key 1 with denominator 2.
struct Indeterminate {
  char symbol = 't';
  int denominator = 1;

  friend bool operator==(const Indeterminate&, const Indeterminate&) = default;
};

namespace detail {

template <typename C>
C checked_add(C a, C b) {
  if constexpr (std::is_integral_v<C>) {
    C r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
    return r;
  } else {
    return a + b;
  }
}

template <typename C>
C checked_mul(C a, C b) {
  if constexpr (std::is_integral_v<C>) {
    C r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
    return r;
  } else {
    return a * b;
  }
}

}  // namespace detail

/// Sparse Laurent polynomial in one variable with exact coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// polynomial equality.
template <typename Coeff>
class LaurentPolynomial {
 public:
  using Scalar = Coeff;
  using Terms = std::map<int, Coeff>;

  LaurentPolynomial() = default;
  LaurentPolynomial(int constant) : LaurentPolynomial(Coeff(constant), Indeterminate{}) {}  // NOLINT
  LaurentPolynomial(Coeff constant, Indeterminate var) : var_(var) {
    if (constant != Coeff(0)) terms_[0] = constant;
  }

  static LaurentPolynomial monomial(Coeff c, int key, Indeterminate var) {
    LaurentPolynomial p;
    p.var_ = var;
    if (c != Coeff(0)) p.terms_[key] = c;
    return p;
  }

  const Terms& terms() const { return terms_; }
  const Indeterminate& variable() const { return var_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coefficient(int key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  int min_key() const {
    if (is_zero()) throw std::domain_error("degree of zero polynomial");
    return terms_.begin()->first;
  }
  int max_key() const {
    if (is_zero()) throw std::domain_error("degree of zero polynomial");
    return terms_.rbegin()->first;
  }

  // Constants and the zero polynomial adopt the other operand's variable.
  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    adopt(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    adopt(o);
    for (const auto& [k, c] : o.terms_) add_term(k, detail::checked_mul(Coeff(-1), c));
    return *this;
  }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a) {
    for (auto& [k, c] : a.terms_) c = detail::checked_mul(Coeff(-1), c);
    return a;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    r.var_ = a.is_constant() ? b.var_ : a.var_;
    if (!a.is_constant() && !b.is_constant() && !(a.var_ == b.var_))
      throw std::invalid_argument("Laurent polynomials in different variables");
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, detail::checked_mul(ca, cb));
    return r;
  }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.terms_ != b.terms_) return false;
    return a.is_constant() || a.var_ == b.var_;
  }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

  /// Multiplies every exponent by `factor` (factor may be negative).
  LaurentPolynomial substitute_power(int factor) const {
    LaurentPolynomial r;
    r.var_ = var_;
    for (const auto& [k, c] : terms_) r.add_term(k * factor, c);
    return r;
  }

  /// Reinterprets the stored keys under a different variable.
  LaurentPolynomial relabel(Indeterminate var) const {
    LaurentPolynomial r = *this;
    r.var_ = var;
    return r;
  }

  LaurentPolynomial pow(unsigned n) const {
    LaurentPolynomial r(Coeff(1), var_);
    LaurentPolynomial base = *this;
    while (n) {
      if (n & 1U) r *= base;
      base *= base;
      n >>= 1U;
    }
    return r;
  }

  /// Exact division; throws if `d` does not divide this polynomial.
  LaurentPolynomial exact_divide(const LaurentPolynomial& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    LaurentPolynomial rem = *this;
    LaurentPolynomial quot;
    quot.var_ = var_;
    const int dtop = d.max_key();
    const Coeff lead = d.terms_.rbegin()->second;
    while (!rem.is_zero()) {
      const int top = rem.max_key();
      if (top - dtop < rem.min_key() - d.min_key()) break;
      const Coeff c = rem.terms_.rbegin()->second;
      if (c % lead != Coeff(0)) break;
      auto step = monomial(c / lead, top - dtop, var_);
      quot += step;
      rem -= step * d;
    }
    if (!rem.is_zero()) throw std::domain_error("inexact Laurent polynomial division");
    return quot;
  }

  /// Descending-power rendering, e.g. "-t^4 + t^3 + t" or "t^(5/2)".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      Coeff c = it->second;
      const int key = it->first;
      if (first) {
        if (c < Coeff(0)) os << '-';
      } else {
        os << (c < Coeff(0) ? " - " : " + ");
      }
      first = false;
      Coeff mag = c < Coeff(0) ? Coeff(-c) : c;
      if (key == 0) {
        os << mag;
        continue;
      }
      if (mag != Coeff(1)) os << mag;
      os << var_.symbol;
      int g = std::gcd(key, var_.denominator);
      int num = key / g;
      int den = var_.denominator / g;
      if (den == 1) {
        if (num != 1) os << '^' << num;
      } else {
        os << "^(" << num << '/' << den << ')';
      }
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << p.str(); }

 private:
  void adopt(const LaurentPolynomial& o) {
    if (is_constant()) {
      var_ = o.var_;
    } else if (!o.is_constant() && !(var_ == o.var_)) {
      throw std::invalid_argument("Laurent polynomials in different variables");
    }
  }

  void add_term(int key, Coeff c) {
    if (c == Coeff(0)) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second = detail::checked_add(it->second, c);
      if (it->second == Coeff(0)) terms_.erase(it);
    }
  }

  Terms terms_;
  Indeterminate var_{};
};

using LaurentPoly = LaurentPolynomial<std::int64_t>;

}  // namespace tribraid
