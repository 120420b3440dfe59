#include <doctest.h>

#include "oracles.hpp"
#include "powersum/sequences.hpp"

using namespace powersum;

TEST_CASE("geometric_sum") {
  CHECK(geometric_sum(1, 2, 3) == Rational(15));
  CHECK(geometric_sum(1, 1, 4) == Rational(5));
  CHECK(geometric_sum(1, Rational(1, 2), 2) == Rational(7, 4));
  CHECK(geometric_sum(3, -1, 5) == Rational(0));
  CHECK(geometric_sum(Rational(2, 3), 0, 9) == Rational(2, 3));
}

TEST_CASE("geometric_sum matches accumulation") {
  oracle::Gen gen(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Rational a0 = gen.rational(10);
    const Rational r = trial % 6 == 0 ? Rational(1) : gen.rational(4);
    const auto n = static_cast<std::uint64_t>(gen.integer(0, 64));
    Rational acc;
    Rational term = a0;
    for (std::uint64_t i = 0; i <= n; ++i) {
      acc += term;
      term *= r;
    }
    CHECK(geometric_sum(a0, r, n) == acc);
  }
}

TEST_CASE("fibonacci") {
  CHECK(fib_doubling(0) == 0);
  CHECK(fib_doubling(1) == 1);
  CHECK(fib_doubling(11) == 89);
  CHECK(fib_doubling(12) == 144);
  CHECK(fib_doubling(30) == 832040);
  CHECK(fib_binet(0) == 0);
  CHECK(fib_binet(1) == 1);
  CHECK(fib_binet(10) == 55);
  CHECK(fib_binet(12) == 144);
  for (unsigned n = 0; n <= 300; ++n) {
    const Integer expected = oracle::fib_iterative(n);
    CHECK(fib_doubling(n) == expected);
    CHECK(fib_binet(n) == expected);
  }
}

TEST_CASE("square-sum identity") {
  CHECK(fib_square_sum(1) == std::pair<Integer, Integer>{1, 1});
  CHECK(fib_square_sum(10) == std::pair<Integer, Integer>{4895, 4895});
  // 89 * 144 = F_11 F_12 is the rectangle for squares F_1..F_11.
  CHECK(fib_square_sum(11) == std::pair<Integer, Integer>{12816, 89 * 144});
  CHECK(fib_square_sum(12) == std::pair<Integer, Integer>{33552, 144 * 233});
  for (unsigned n = 1; n <= 50; ++n) {
    const auto [sum, product] = fib_square_sum(n);
    CHECK(sum == product);
  }
}

TEST_CASE("Surd5 conjugation is multiplicative") {
  oracle::Gen gen(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Surd5 u(gen.rational(), gen.rational());
    const Surd5 v(gen.rational(), gen.rational());
    CHECK((u * v).conjugate() == u.conjugate() * v.conjugate());
    CHECK((u + v).conjugate() == u.conjugate() + v.conjugate());
  }
  const Surd5 phi(Rational(1, 2), Rational(1, 2));
  // phi^2 = phi + 1
  CHECK(phi * phi == phi + Surd5(1, 0));
}
