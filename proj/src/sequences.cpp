#include "powersum/sequences.hpp"

#include <stdexcept>

namespace powersum {

Surd5 pow(Surd5 base, std::uint64_t exponent) {
  Surd5 result(1, 0);
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Rational geometric_sum(const Rational& a0, const Rational& r, std::uint64_t n) {
  if (r == Rational(1)) return a0 * Rational(Integer(n) + 1);
  Rational r_pow = 1;
  Rational base = r;
  for (std::uint64_t e = n + 1; e > 0; e >>= 1U) {
    if (e & 1U) r_pow *= base;
    if (e > 1) base *= base;
  }
  return a0 * (Rational(1) - r_pow) / (Rational(1) - r);
}

namespace {

// (F_m, F_{m+1})
std::pair<Integer, Integer> fib_pair(std::uint64_t m) {
  if (m == 0) return {0, 1};
  auto [a, b] = fib_pair(m / 2);
  Integer even = a * (2 * b - a);
  Integer odd = a * a + b * b;
  if (m % 2 == 0) return {std::move(even), std::move(odd)};
  Integer next = even + odd;
  return {std::move(odd), std::move(next)};
}

}  // namespace

Integer fib_doubling(std::uint64_t n) { return fib_pair(n).first; }

Integer fib_binet(std::uint64_t n) {
  const Rational half(1, 2);
  // phi^n = a + b sqrt5 and psi^n = a - b sqrt5, so (phi^n - psi^n)/sqrt5 = 2b.
  const Surd5 phi_n = pow(Surd5(half, half), n);
  const Rational f = Rational(2) * phi_n.surd_part();
  if (!f.is_integer()) throw std::logic_error("Binet evaluation produced a non-integer");
  return f.num();
}

std::pair<Integer, Integer> fib_square_sum(std::uint64_t n) {
  Integer sum = 0;
  Integer a = 0;
  Integer b = 1;
  for (std::uint64_t k = 1; k <= n; ++k) {
    // a = F_k after the shift.
    Integer next = a + b;
    a = std::move(b);
    b = std::move(next);
    sum += a * a;
  }
  return {std::move(sum), a * b};
}

}  // namespace powersum
