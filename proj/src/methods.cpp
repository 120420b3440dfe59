#include "powersum/methods.hpp"

#include <stdexcept>

#include "powersum/linalg.hpp"
#include "powersum/symbolic.hpp"

namespace powersum {

namespace {

Integer factorial(unsigned k) {
  Integer f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer c = 1;
  for (unsigned i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

Polynomial n_plus(long long c) { return Polynomial({Rational(c), Rational(1)}); }

}  // namespace

std::string_view method_name(Method method) {
  switch (method) {
    case Method::lhopital: return "lhopital";
    case Method::matrix: return "matrix";
    case Method::stirling: return "stirling";
    case Method::euler_maclaurin: return "euler-maclaurin";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

Integer brute_force_power_sum(unsigned d, std::uint64_t n) {
  Integer sum = 0;
  for (std::uint64_t m = 0; m <= n; ++m) {
    Integer term = 1;
    for (unsigned i = 0; i < d; ++i) term *= m;
    sum += term;
  }
  return sum;
}

Polynomial power_sum_lhopital(unsigned d) {
  GeomRational g = geometric_seed();
  for (unsigned i = 0; i < d; ++i) g = apply_x_ddx(g);
  return lhopital_limit(g);
}

Polynomial power_sum_matrix(unsigned d) {
  // The zero-constant-term ansatz fails at d = 0, where p_0(0) = 1.
  if (d == 0) return n_plus(1);
  const Matrix m = vandermonde(d);
  std::vector<Rational> rhs;
  rhs.reserve(d + 1);
  for (unsigned i = 1; i <= d + 1; ++i) rhs.emplace_back(brute_force_power_sum(d, i));
  std::vector<Rational> a = cramer_solve(m, rhs);
  std::vector<Rational> coeffs;
  coeffs.reserve(d + 2);
  coeffs.emplace_back(0);
  coeffs.insert(coeffs.end(), a.begin(), a.end());
  return Polynomial(std::move(coeffs));
}

StirlingTable::StirlingTable(unsigned max_k) : max_k_(max_k), rows_(max_k + 1) {
  rows_[0] = {Integer(1)};
  for (unsigned k = 1; k <= max_k; ++k) {
    auto& row = rows_[k];
    const auto& prev = rows_[k - 1];
    row.assign(k + 1, Integer(0));
    for (unsigned j = 1; j <= k; ++j) {
      Integer same = j < k ? Integer(j * prev[j]) : Integer(0);
      row[j] = same + prev[j - 1];
    }
  }
}

Integer StirlingTable::operator()(unsigned k, unsigned j) const {
  if (k > max_k_) throw std::out_of_range("Stirling index beyond table");
  return j <= k ? rows_[k][j] : Integer(0);
}

StirlingTable stirling_table(unsigned max_k) { return StirlingTable(max_k); }

Polynomial falling_factorial(const Polynomial& y, unsigned k) {
  Polynomial result = Polynomial::constant(1);
  for (unsigned i = 0; i < k; ++i) result = result * (y - Polynomial::constant(i));
  return result;
}

Polynomial falling_power_sum_poly(unsigned k) {
  return falling_factorial(n_plus(k + 1), k + 1) * Rational(Integer(1), Integer(k + 1));
}

Polynomial power_sum_stirling(unsigned d) {
  const StirlingTable s(d);
  // sum_{m=0..n} (m)_j = (n+1)_{j+1} / (j+1); for j = 0 that is n + 1, which
  // carries the 0^0 = 1 convention at d = 0.
  const Polynomial n1 = n_plus(1);
  Polynomial result;
  for (unsigned j = 0; j <= d; ++j) {
    const Integer coeff = s(d, j);
    if (coeff.is_zero()) continue;
    result += falling_factorial(n1, j + 1) * Rational(coeff, Integer(j + 1));
  }
  return result;
}

BernoulliTable::BernoulliTable(unsigned max_j) : values_(max_j + 1) {
  values_[0] = 1;
  for (unsigned m = 1; m <= max_j; ++m) {
    Rational acc;
    for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * values_[j];
    values_[m] = -acc / Rational(m + 1);
  }
  if (max_j >= 1) values_[1] = -values_[1];
}

BernoulliTable bernoulli_table(unsigned max_j) { return BernoulliTable(max_j); }

Polynomial power_sum_euler_maclaurin(unsigned d) {
  if (d == 0) return n_plus(1);
  const BernoulliTable b(d);
  // Integral term n^{d+1}/(d+1), then (B_j / j!) * f^{(j-1)}(n) with
  // f^{(j-1)}(n) = d!/(d-j+1)! * n^{d-j+1}; the terms at 0 vanish for j <= d.
  Polynomial result = Polynomial::monomial(Rational(Integer(1), Integer(d + 1)), d + 1);
  const Integer d_fact = factorial(d);
  for (unsigned j = 1; j <= d; ++j) {
    if (b[j].is_zero()) continue;
    const Rational weight = b[j] * Rational(d_fact, factorial(j) * factorial(d - j + 1));
    result += Polynomial::monomial(weight, d - j + 1);
  }
  return result;
}

Polynomial power_sum(unsigned d, Method method) {
  switch (method) {
    case Method::lhopital: return power_sum_lhopital(d);
    case Method::matrix: return power_sum_matrix(d);
    case Method::stirling: return power_sum_stirling(d);
    case Method::euler_maclaurin: return power_sum_euler_maclaurin(d);
  }
  throw std::invalid_argument("unknown method");
}

Polynomial second_derivative_sum() {
  // f_n''(x) = sum_{k=0..n} k (k-1) x^{k-2}; at x = 1 that is sum k (k-1).
  return lhopital_limit(apply_ddx(apply_ddx(geometric_seed())));
}

Polynomial recover_p2_via_plain_derivative() {
  return second_derivative_sum() + power_sum_lhopital(1);
}

}  // namespace powersum
