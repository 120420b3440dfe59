#include <doctest.h>

#include "oracles.hpp"
#include "powersum/polynomial.hpp"

using powersum::Polynomial;
using powersum::Rational;

namespace {

Polynomial P(std::vector<Rational> c) { return Polynomial(std::move(c)); }

}  // namespace

TEST_CASE("arithmetic examples") {
  const Polynomial n_plus_1 = P({1, 1});
  const Polynomial n_minus_1 = P({-1, 1});
  CHECK(n_plus_1 * n_minus_1 == P({-1, 0, 1}));

  const Polynomial p1 = P({0, Rational(1, 2), Rational(1, 2)});
  CHECK(p1 + Polynomial() == p1);

  CHECK(P({1, 1}) * P({2, 1}) == P({2, 3, 1}));
}

TEST_CASE("canonical form drops trailing zeros") {
  CHECK(P({1, 2, 0, 0}).degree() == 1);
  CHECK(P({0, 0}).is_zero());
  CHECK(Polynomial().degree() == -1);
  CHECK((P({1, 1}) - P({1, 1})).coefficients().empty());
  CHECK((P({0, 0, 1}) - P({0, 1, 1})) == P({0, -1}));
  CHECK((P({1, 2}) * Rational(0)).is_zero());
}

TEST_CASE("evaluation") {
  const Polynomial p1 = P({0, Rational(1, 2), Rational(1, 2)});
  CHECK(evaluate(p1, 100) == Rational(5050));
  CHECK(evaluate(Polynomial(), 17) == Rational(0));
  const Polynomial p2 = P({0, Rational(1, 6), Rational(1, 2), Rational(1, 3)});
  CHECK(evaluate(p2, 3) == Rational(14));
  CHECK(p2(Rational(1, 2)) == Rational(1, 4));  // 1/24 + 1/8 + 1/12
}

TEST_CASE("substitute_affine") {
  CHECK(substitute_affine(P({0, 0, 1}), 1, 1) == P({1, 2, 1}));
  CHECK(substitute_affine(P({0, 1}), 0, 5) == P({5}));
  CHECK(substitute_affine(P({0, 1, 1}), 1, -1) == P({0, -1, 1}));
  CHECK(substitute_affine(Polynomial(), 3, 4).is_zero());
}

TEST_CASE("ring laws, degree law and evaluation homomorphism") {
  powersum::oracle::Gen gen(7);
  for (int i = 0; i < 200; ++i) {
    const Polynomial p = gen.polynomial();
    const Polynomial q = gen.polynomial();
    const Polynomial r = gen.polynomial();
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).is_zero());
    if (!p.is_zero() && !q.is_zero()) CHECK((p * q).degree() == p.degree() + q.degree());

    const Rational x = gen.rational();
    CHECK(evaluate(p * q, x) == evaluate(p, x) * evaluate(q, x));
    CHECK(evaluate(p + q, x) == evaluate(p, x) + evaluate(q, x));

    const Rational a = gen.rational(5);
    const Rational b = gen.rational(5);
    CHECK(evaluate(substitute_affine(p, a, b), x) == evaluate(p, a * x + b));

    for (const Polynomial& s : {p * q, p + q, p - q, substitute_affine(p, a, b)}) {
      if (!s.is_zero()) CHECK(!s.coefficients().back().is_zero());
    }
  }
}
