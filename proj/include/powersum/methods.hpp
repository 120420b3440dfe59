#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "powersum/polynomial.hpp"
#include "powersum/rational.hpp"

// Four independent constructions of the power-sum polynomial
//
//     p_d(n) = 0^d + 1^d + ... + n^d,
//
// plus the number tables they rely on. Every method returns the same
// canonical Polynomial; p_0(n) = n + 1 under the convention 0^0 = 1.

namespace powersum {

enum class Method { lhopital, matrix, stirling, euler_maclaurin };

inline constexpr std::array<Method, 4> kAllMethods = {
    Method::lhopital, Method::matrix, Method::stirling, Method::euler_maclaurin};

/// "lhopital", "matrix", "stirling", "euler-maclaurin".
std::string_view method_name(Method method);
std::optional<Method> parse_method(std::string_view name);

/// 0^d + 1^d + ... + n^d by direct summation, with 0^0 = 1.
Integer brute_force_power_sum(unsigned d, std::uint64_t n);

/// Differentiates the geometric series d times with x d/dx and takes the
/// limit x -> 1.
Polynomial power_sum_lhopital(unsigned d);

/// Interpolates through p_d(1..d+1) by solving the Vandermonde system with
/// Cramer's rule. The constant term is pinned at zero (d >= 1).
Polynomial power_sum_matrix(unsigned d);

/// Rewrites m^d in falling powers, m^d = sum_j S(d, j) (m)_j, and sums each
/// falling power in closed form.
Polynomial power_sum_stirling(unsigned d);

/// Euler-Maclaurin with f(x) = x^d, carried to the order where the remainder
/// vanishes. Uses B_1 = +1/2 (sum includes both endpoints).
Polynomial power_sum_euler_maclaurin(unsigned d);

Polynomial power_sum(unsigned d, Method method);

/// Stirling numbers of the second kind S(k, j), 0 <= j <= k <= max_k.
class StirlingTable {
 public:
  explicit StirlingTable(unsigned max_k);

  unsigned max_k() const { return max_k_; }
  /// Zero for j > k.
  Integer operator()(unsigned k, unsigned j) const;

 private:
  unsigned max_k_;
  std::vector<std::vector<Integer>> rows_;
};

StirlingTable stirling_table(unsigned max_k);

/// Bernoulli numbers B_0..B_max_j with B_1 = +1/2.
///
/// Built from the classical recurrence sum_{j<=m} C(m+1, j) B_j = 0 (which
/// gives B_1 = -1/2) and then flipping the sign of B_1. With the plus sign
/// the Euler-Maclaurin correction accounts for the f(n) endpoint of a sum
/// running from 0 to n inclusive.
class BernoulliTable {
 public:
  explicit BernoulliTable(unsigned max_j);

  unsigned max_j() const { return static_cast<unsigned>(values_.size()) - 1; }
  const Rational& operator[](unsigned j) const { return values_.at(j); }
  const std::vector<Rational>& values() const { return values_; }

 private:
  std::vector<Rational> values_;
};

BernoulliTable bernoulli_table(unsigned max_j);

/// (y)_k = y (y - 1) ... (y - k + 1) with y given as a polynomial in n.
Polynomial falling_factorial(const Polynomial& y, unsigned k);

/// q_k(n) = sum_{m=0..n} (m + k)_k = (n + k + 1)_{k+1} / (k + 1).
Polynomial falling_power_sum_poly(unsigned k);

/// sum_{k=0..n} k (k - 1), obtained by applying plain d/dx twice to the
/// geometric series and taking the limit at x = 1.
Polynomial second_derivative_sum();

/// sum k^2 = sum k (k - 1) + sum k. Must coincide with power_sum_lhopital(2).
Polynomial recover_p2_via_plain_derivative();

}  // namespace powersum
