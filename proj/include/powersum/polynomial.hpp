#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "powersum/rational.hpp"

namespace powersum {

/// Dense univariate polynomial in n over the rationals.
///
/// Coefficients are ascending: coefficients()[i] multiplies n^i. The stored
/// sequence never ends in a zero, so the zero polynomial is the empty
/// sequence and equality is plain structural equality.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(Rational c);
  static Polynomial monomial(Rational c, std::size_t power);
  /// The polynomial n.
  static Polynomial variable();

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Zero past the degree.
  Rational coefficient(std::size_t power) const;
  Rational leading_coefficient() const;

  Rational operator()(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Horner evaluation.
Rational evaluate(const Polynomial& p, const Rational& x);

/// Returns q with q(n) = p(scale * n + shift).
Polynomial substitute_affine(const Polynomial& p, const Rational& scale, const Rational& shift);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace powersum
