#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace recipair {

using Integer = mpz_class;

/// Univariate polynomial over the integers with exact arbitrary-precision
/// coefficients, stored in ascending degree. Kept normalized: the stored
/// leading coefficient is nonzero, and the zero polynomial stores nothing.
class IntPolynomial {
 public:
  IntPolynomial() = default;  // the zero polynomial
  explicit IntPolynomial(std::vector<Integer> coeffs);

  static IntPolynomial constant(Integer c);
  static IntPolynomial monomial(Integer c, std::size_t degree);
  static IntPolynomial variable() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the stored degree.
  Integer coeff(std::size_t i) const;

  Integer eval(const Integer& x) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const Integer& scalar);

  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend IntPolynomial operator*(IntPolynomial lhs, const IntPolynomial& rhs) {
    lhs *= rhs;
    return lhs;
  }
  friend IntPolynomial operator*(IntPolynomial lhs, const Integer& scalar) {
    lhs *= scalar;
    return lhs;
  }
  friend IntPolynomial operator-(IntPolynomial p);

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

/// p(-x).
IntPolynomial substitute_negate(const IntPolynomial& p);

/// p(x - shift), expanded exactly.
IntPolynomial substitute_shift(const IntPolynomial& p, std::size_t shift);

/// x(x-1)...(x-m+1); the empty product for m = 0.
IntPolynomial falling_factorial(std::size_t m);

/// x(x+1)...(x+m-1); the empty product for m = 0.
IntPolynomial rising_factorial(std::size_t m);

/// Cycle polynomial of a wreath product assembled from the cycle polynomial
/// of the inner (base) group and of the outer (top) group acting on
/// top_degree blocks: with f_top = sum_j a_j x^j, returns
/// sum_j a_j * base_order^(top_degree - j) * f_base^j.
/// Every division implied by the rational form cancels, so the computation
/// stays in integer coefficients throughout. Requires degree(f_top) ==
/// top_degree and base_order >= 1.
IntPolynomial wreath_cycle_poly(const IntPolynomial& f_base,
                                const Integer& base_order,
                                const IntPolynomial& f_top,
                                std::size_t top_degree);

/// Human-readable descending form, e.g. "x^4-2x^3+3x^2-2x"; "0" when zero.
std::string to_display_string(const IntPolynomial& p);

}  // namespace recipair
