#include "recipair/poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace recipair {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial IntPolynomial::constant(Integer c) {
  return IntPolynomial(std::vector<Integer>{std::move(c)});
}

IntPolynomial IntPolynomial::monomial(Integer c, std::size_t degree) {
  if (c == 0) return IntPolynomial();
  std::vector<Integer> v(degree + 1, Integer(0));
  v[degree] = std::move(c);
  return IntPolynomial(std::move(v));
}

Integer IntPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

Integer IntPolynomial::eval(const Integer& x) const {
  Integer acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> out(coeffs_.size() + rhs.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

IntPolynomial operator-(IntPolynomial p) {
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

IntPolynomial substitute_negate(const IntPolynomial& p) {
  IntPolynomial q = p;
  std::vector<Integer> c = q.coeffs();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial substitute_shift(const IntPolynomial& p, std::size_t shift) {
  if (shift == 0) return p;
  IntPolynomial base(
      std::vector<Integer>{Integer(-static_cast<long>(shift)), Integer(1)});
  IntPolynomial result;
  IntPolynomial power = IntPolynomial::constant(1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    result += power * p.coeffs()[i];
    power *= base;
  }
  return result;
}

IntPolynomial falling_factorial(std::size_t m) {
  IntPolynomial result = IntPolynomial::constant(1);
  for (std::size_t i = 0; i < m; ++i) {
    result *= IntPolynomial(
        std::vector<Integer>{Integer(-static_cast<long>(i)), Integer(1)});
  }
  return result;
}

IntPolynomial rising_factorial(std::size_t m) {
  IntPolynomial result = IntPolynomial::constant(1);
  for (std::size_t i = 0; i < m; ++i) {
    result *= IntPolynomial(
        std::vector<Integer>{Integer(static_cast<long>(i)), Integer(1)});
  }
  return result;
}

IntPolynomial wreath_cycle_poly(const IntPolynomial& f_base,
                                const Integer& base_order,
                                const IntPolynomial& f_top,
                                std::size_t top_degree) {
  if (f_top.degree() != static_cast<int>(top_degree))
    throw std::invalid_argument(
        "wreath_cycle_poly: top polynomial degree must equal the number of "
        "blocks");
  if (base_order < 1)
    throw std::invalid_argument("wreath_cycle_poly: base order must be >= 1");
  IntPolynomial result;
  IntPolynomial base_power = IntPolynomial::constant(1);
  for (std::size_t j = 0; j <= top_degree; ++j) {
    Integer a = f_top.coeff(j);
    if (a != 0) {
      Integer order_pow;
      mpz_pow_ui(order_pow.get_mpz_t(), base_order.get_mpz_t(),
                 static_cast<unsigned long>(top_degree - j));
      result += base_power * (a * order_pow);
    }
    if (j < top_degree) base_power *= f_base;
  }
  return result;
}

std::string to_display_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    Integer c = p.coeff(static_cast<std::size_t>(d));
    if (c == 0) continue;
    const bool negative = c < 0;
    Integer abs_c = abs(c);
    if (first) {
      if (negative) out << '-';
      first = false;
    } else {
      out << (negative ? '-' : '+');
    }
    const bool unit = abs_c == 1;
    if (d == 0 || !unit) out << abs_c.get_str();
    if (d > 0) {
      out << 'x';
      if (d > 1) out << '^' << d;
    }
  }
  return out.str();
}

}  // namespace recipair
