#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "powersum/symbolic.hpp"

using namespace powersum;

namespace {

Polynomial P(std::vector<Rational> c) { return Polynomial(std::move(c)); }
ExpTerm xn(Polynomial c, std::int64_t shift) { return {std::move(c), true, shift}; }
ExpTerm xc(Polynomial c, std::int64_t shift) { return {std::move(c), false, shift}; }

const Polynomial kOne = P({1});
const Polynomial kN = P({0, 1});

// n x^{n+2} - (n+1) x^{n+1} + x
ExpPoly first_numerator() { return ExpPoly({xn(kN, 2), xn(-P({1, 1}), 1), xc(kOne, 1)}); }

// n^2 x^{n+4} + (-3n^2-2n+1) x^{n+3} + (3n^2+4n) x^{n+2} - (n+1)^2 x^{n+1} - x^3 + x,
// the second x d/dx image written over (x-1)^4.
ExpPoly displayed_second_numerator() {
  return ExpPoly({xn(P({0, 0, 1}), 4), xn(P({1, -2, -3}), 3), xn(P({0, 4, 3}), 2), xn(-P({1, 2, 1}), 1),
                  xc(-kOne, 3), xc(kOne, 1)});
}

}  // namespace

TEST_CASE("ExpPoly canonicalization") {
  const ExpPoly e({xc(kOne, 0), xn(kN, 1), xn(kN, 3), xc(kOne, 0), xn(-kN, 1)});
  REQUIRE(e.terms().size() == 2);
  CHECK(e.terms()[0] == xn(kN, 3));
  CHECK(e.terms()[1] == xc(P({2}), 0));
  CHECK_THROWS_AS(ExpPoly({xc(kOne, -1)}), std::invalid_argument);
  CHECK(ExpPoly({xn(Polynomial(), 2)}).is_zero());
}

TEST_CASE("geometric seed") {
  const GeomRational seed = geometric_seed();
  CHECK(seed.denom_power == 1);
  CHECK(seed.numerator == ExpPoly({xn(kOne, 1), xc(-kOne, 0)}));
  CHECK(instantiate(seed, 3, 2) == Rational(15));
  CHECK(instantiate(seed, 0, 3) == Rational(1));
}

TEST_CASE("derivative") {
  CHECK(derivative(ExpPoly({xn(kOne, 1)})) == ExpPoly({xn(P({1, 1}), 0)}));
  CHECK(derivative(ExpPoly({xc(-kOne, 0)})).is_zero());
  // n(n+2) x^{n+1} - (n+1)^2 x^n + 1
  CHECK(derivative(first_numerator()) ==
        ExpPoly({xn(P({0, 2, 1}), 1), xn(-P({1, 2, 1}), 0), xc(kOne, 0)}));
}

TEST_CASE("multiply by x and by x - 1") {
  const ExpPoly seed = geometric_seed().numerator;
  CHECK(multiply(seed, AffineFactor::x) == ExpPoly({xn(kOne, 2), xc(-kOne, 1)}));
  CHECK(multiply(ExpPoly(), AffineFactor::x).is_zero());
  const ExpPoly g2 = apply_x_ddx(apply_x_ddx(geometric_seed())).numerator;
  CHECK(multiply(g2, AffineFactor::x_minus_one) == displayed_second_numerator());
}

TEST_CASE("apply_x_ddx") {
  const GeomRational g1 = apply_x_ddx(geometric_seed());
  CHECK(g1.denom_power == 2);
  CHECK(g1.numerator == first_numerator());
  CHECK(value_at_one(g1.numerator).is_zero());

  const GeomRational g2 = apply_x_ddx(g1);
  CHECK(g2.denom_power == 3);
  CHECK(g2.numerator == ExpPoly({xn(P({0, 0, 1}), 3), xn(P({1, -2, -2}), 2), xn(P({1, 2, 1}), 1),
                                 xc(-kOne, 2), xc(-kOne, 1)}));

  CHECK_THROWS_AS(apply_x_ddx(GeomRational{ExpPoly({xc(kOne, 0)}), 0}), std::invalid_argument);
}

TEST_CASE("apply_ddx") {
  const GeomRational h1 = apply_ddx(geometric_seed());
  CHECK(h1.denom_power == 2);
  CHECK(h1.numerator == ExpPoly({xn(kN, 1), xn(-P({1, 1}), 0), xc(kOne, 0)}));
  CHECK(value_at_one(h1.numerator).is_zero());
  // 0 + 1 + 2x + ... + n x^{n-1} at x = 1
  CHECK(lhopital_limit(h1) == P({0, Rational(1, 2), Rational(1, 2)}));
}

TEST_CASE("value_at_one") {
  CHECK(value_at_one(geometric_seed().numerator).is_zero());
  CHECK(value_at_one(first_numerator()).is_zero());
  // n(n+2)(n+1) x^n - (n+1)^2 n x^{n-1}, then divide by 2!
  const ExpPoly twice({xn(P({0, 2, 3, 1}), 0), xn(-P({0, 1, 2, 1}), -1)});
  CHECK(value_at_one(twice) * Rational(1, 2) == P({0, Rational(1, 2), Rational(1, 2)}));
}

TEST_CASE("lhopital_limit") {
  CHECK(lhopital_limit(geometric_seed()) == P({1, 1}));
  const GeomRational g1 = apply_x_ddx(geometric_seed());
  CHECK(lhopital_limit(g1) == P({0, Rational(1, 2), Rational(1, 2)}));
  CHECK(lhopital_limit(apply_x_ddx(g1)) == P({0, Rational(1, 6), Rational(1, 2), Rational(1, 3)}));

  const GeomRational broken{geometric_seed().numerator, 2};
  CHECK_THROWS_WITH_AS(lhopital_limit(broken), "L'Hopital precondition violated", std::logic_error);
}

TEST_CASE("trace: d+1 steps, zero at every step but the last") {
  GeomRational g = geometric_seed();
  for (unsigned d = 0; d <= 8; ++d) {
    const LimitTrace t = lhopital_trace(g);
    CHECK(t.steps == d + 1);
    CHECK(g.denom_power == d + 1);
    REQUIRE(t.values_at_one.size() == d + 2);
    for (unsigned i = 0; i <= d; ++i) CHECK(t.values_at_one[i].is_zero());
    CHECK_FALSE(t.values_at_one.back().is_zero());
    g = apply_x_ddx(g);
  }
}

TEST_CASE("sampling: symbolic chain matches the differentiated series numerically") {
  oracle::Gen gen(99);
  GeomRational g = geometric_seed();
  GeomRational h = geometric_seed();
  for (unsigned k = 0; k <= 5; ++k) {
    for (int trial = 0; trial < 10; ++trial) {
      Rational x = gen.nonzero_rational(9);
      if (x == Rational(1)) x = Rational(3, 2);
      const unsigned n = static_cast<unsigned>(gen.integer(0, 8));
      // x d/dx applied k times: sum m^k x^m.
      CHECK(instantiate(g, n, x) == oracle::weighted_power_series(k, n, x));
      // d/dx applied k times: sum (m)_k x^{m-k}.
      Rational expected;
      for (unsigned m = k; m <= n; ++m) {
        expected += Rational(oracle::falling(Integer(m), k)) * pow(x, m - k);
      }
      CHECK(instantiate(h, n, x) == expected);
    }
    g = apply_x_ddx(g);
    h = apply_ddx(h);
    CHECK(g.denom_power == k + 2);
    CHECK(h.denom_power == k + 2);
  }
}
