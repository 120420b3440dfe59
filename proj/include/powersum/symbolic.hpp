#pragma once

#include <cstdint>
#include <vector>

#include "powersum/polynomial.hpp"

// Closed forms of differentiated geometric series.
//
// Starting from 1 + x + ... + x^n = (x^{n+1} - 1) / (x - 1), repeated
// application of x d/dx (or d/dx) keeps the right-hand side in the shape
//
//     N(x) / (x - 1)^k,   N(x) = sum_i c_i(n) * x^{eps_i * n + shift_i}
//
// with polynomial coefficients c_i(n) and eps_i in {0, 1}. Substituting x = 1
// gives 0/0, and the limit is taken by differentiating N exactly k times
// (the denominator becomes k!). Every x^{...} collapses to 1 at x = 1, so the
// limit is a polynomial in n.
//
// The engine keeps the reduced denominator (x - 1)^{m+1} after m operator
// applications:
//
//     x d/dx [N / (x-1)^k] = [x (x-1) N' - k x N] / (x-1)^{k+1}
//       d/dx [N / (x-1)^k] = [  (x-1) N' - k   N] / (x-1)^{k+1}
//
// so the limit needs d+1 differentiations for p_d, rather than the
// exponentially many needed when quotient-rule denominators are left
// uncancelled.

namespace powersum {

/// c(n) * x^{(depends_on_n ? n : 0) + shift}.
struct ExpTerm {
  Polynomial coeff;
  bool depends_on_n = false;
  std::int64_t shift = 0;

  friend bool operator==(const ExpTerm&, const ExpTerm&) = default;
};

/// Canonical sum of ExpTerms: one term per (depends_on_n, shift), sorted with
/// n-dependent terms first and shifts descending, no zero coefficients.
class ExpPoly {
 public:
  ExpPoly() = default;
  /// Merges like terms. Throws std::invalid_argument for a constant exponent
  /// below zero.
  explicit ExpPoly(std::vector<ExpTerm> terms);

  const std::vector<ExpTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ExpPoly& operator+=(const ExpPoly& rhs);
  ExpPoly& operator-=(const ExpPoly& rhs);
  ExpPoly& operator*=(const Polynomial& factor);

  friend ExpPoly operator+(ExpPoly lhs, const ExpPoly& rhs) { return lhs += rhs; }
  friend ExpPoly operator-(ExpPoly lhs, const ExpPoly& rhs) { return lhs -= rhs; }
  friend ExpPoly operator*(ExpPoly lhs, const Polynomial& rhs) { return lhs *= rhs; }

  friend bool operator==(const ExpPoly&, const ExpPoly&) = default;

 private:
  std::vector<ExpTerm> terms_;
};

/// N(x) / (x - 1)^denom_power.
struct GeomRational {
  ExpPoly numerator;
  unsigned denom_power = 0;

  friend bool operator==(const GeomRational&, const GeomRational&) = default;
};

/// (x^{n+1} - 1) / (x - 1).
GeomRational geometric_seed();

/// Term-by-term d/dx.
ExpPoly derivative(const ExpPoly& poly);

enum class AffineFactor { x, x_minus_one };

ExpPoly multiply(const ExpPoly& poly, AffineFactor factor);

GeomRational apply_x_ddx(const GeomRational& g);
GeomRational apply_ddx(const GeomRational& g);

/// Sum of all coefficient polynomials: the numerator at x = 1.
Polynomial value_at_one(const ExpPoly& poly);

/// What the limit computation saw on the way down.
struct LimitTrace {
  Polynomial limit;
  /// Number of numerator differentiations performed.
  unsigned steps = 0;
  /// value_at_one of the numerator before each differentiation.
  std::vector<Polynomial> values_at_one;
};

/// lim_{x->1} g(x). Throws std::logic_error("L'Hopital precondition violated")
/// if the numerator stops vanishing at x = 1 before the denominator is
/// differentiated away.
Polynomial lhopital_limit(const GeomRational& g);
LimitTrace lhopital_trace(const GeomRational& g);

/// Numeric value of the numerator at n = n_value, x = x_value.
Rational instantiate(const ExpPoly& poly, std::int64_t n_value, const Rational& x_value);
/// Numeric value of g at n = n_value, x = x_value (x_value != 1).
Rational instantiate(const GeomRational& g, std::int64_t n_value, const Rational& x_value);

}  // namespace powersum
