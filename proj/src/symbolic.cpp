#include "powersum/symbolic.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

namespace powersum {

namespace {

// Ordering key: n-dependent terms first, then shift descending.
using TermKey = std::pair<bool, std::int64_t>;
using TermMap = std::map<TermKey, Polynomial, std::greater<>>;

TermMap to_map(const std::vector<ExpTerm>& terms) {
  TermMap map;
  for (const auto& t : terms) map[{t.depends_on_n, t.shift}] += t.coeff;
  return map;
}

std::vector<ExpTerm> from_map(TermMap&& map) {
  std::vector<ExpTerm> terms;
  terms.reserve(map.size());
  for (auto& [key, coeff] : map) {
    if (coeff.is_zero()) continue;
    terms.push_back({std::move(coeff), key.first, key.second});
  }
  return terms;
}

Integer factorial(unsigned k) {
  Integer f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

ExpPoly::ExpPoly(std::vector<ExpTerm> terms) {
  for (const auto& t : terms) {
    if (!t.depends_on_n && t.shift < 0) {
      throw std::invalid_argument("negative constant exponent in ExpPoly term");
    }
  }
  terms_ = from_map(to_map(terms));
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& rhs) {
  auto map = to_map(terms_);
  for (const auto& t : rhs.terms_) map[{t.depends_on_n, t.shift}] += t.coeff;
  terms_ = from_map(std::move(map));
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& rhs) {
  auto map = to_map(terms_);
  for (const auto& t : rhs.terms_) map[{t.depends_on_n, t.shift}] -= t.coeff;
  terms_ = from_map(std::move(map));
  return *this;
}

ExpPoly& ExpPoly::operator*=(const Polynomial& factor) {
  std::vector<ExpTerm> scaled;
  scaled.reserve(terms_.size());
  for (const auto& t : terms_) {
    Polynomial c = t.coeff * factor;
    if (!c.is_zero()) scaled.push_back({std::move(c), t.depends_on_n, t.shift});
  }
  terms_ = std::move(scaled);
  return *this;
}

GeomRational geometric_seed() {
  ExpPoly numerator({
      {Polynomial::constant(1), true, 1},
      {Polynomial::constant(-1), false, 0},
  });
  return {std::move(numerator), 1};
}

ExpPoly derivative(const ExpPoly& poly) {
  std::vector<ExpTerm> out;
  out.reserve(poly.terms().size());
  for (const auto& t : poly.terms()) {
    // The exponent eps*n + shift comes down as a factor.
    const Polynomial exponent = t.depends_on_n ? Polynomial({Rational(t.shift), Rational(1)})
                                               : Polynomial::constant(t.shift);
    Polynomial c = t.coeff * exponent;
    if (c.is_zero()) continue;
    out.push_back({std::move(c), t.depends_on_n, t.shift - 1});
  }
  return ExpPoly(std::move(out));
}

ExpPoly multiply(const ExpPoly& poly, AffineFactor factor) {
  std::vector<ExpTerm> shifted;
  shifted.reserve(poly.terms().size());
  for (const auto& t : poly.terms()) shifted.push_back({t.coeff, t.depends_on_n, t.shift + 1});
  ExpPoly times_x(std::move(shifted));
  if (factor == AffineFactor::x) return times_x;
  return times_x - poly;
}

GeomRational apply_x_ddx(const GeomRational& g) {
  if (g.denom_power == 0) {
    throw std::invalid_argument("apply_x_ddx needs a (x-1) denominator");
  }
  const auto k = Polynomial::constant(g.denom_power);
  ExpPoly lhs = multiply(multiply(derivative(g.numerator), AffineFactor::x_minus_one), AffineFactor::x);
  ExpPoly rhs = multiply(g.numerator, AffineFactor::x) * k;
  return {lhs - rhs, g.denom_power + 1};
}

GeomRational apply_ddx(const GeomRational& g) {
  if (g.denom_power == 0) {
    throw std::invalid_argument("apply_ddx needs a (x-1) denominator");
  }
  const auto k = Polynomial::constant(g.denom_power);
  ExpPoly lhs = multiply(derivative(g.numerator), AffineFactor::x_minus_one);
  return {lhs - g.numerator * k, g.denom_power + 1};
}

Polynomial value_at_one(const ExpPoly& poly) {
  Polynomial sum;
  for (const auto& t : poly.terms()) sum += t.coeff;
  return sum;
}

LimitTrace lhopital_trace(const GeomRational& g) {
  LimitTrace trace;
  ExpPoly numerator = g.numerator;
  for (unsigned step = 0; step < g.denom_power; ++step) {
    Polynomial at_one = value_at_one(numerator);
    if (!at_one.is_zero()) {
      throw std::logic_error("L'Hopital precondition violated");
    }
    trace.values_at_one.push_back(std::move(at_one));
    numerator = derivative(numerator);
    ++trace.steps;
  }
  Polynomial top = value_at_one(numerator);
  trace.values_at_one.push_back(top);
  trace.limit = top * Rational(Integer(1), factorial(g.denom_power));
  return trace;
}

Polynomial lhopital_limit(const GeomRational& g) { return lhopital_trace(g).limit; }

Rational instantiate(const ExpPoly& poly, std::int64_t n_value, const Rational& x_value) {
  Rational sum;
  for (const auto& t : poly.terms()) {
    const std::int64_t exponent = (t.depends_on_n ? n_value : 0) + t.shift;
    Rational power = pow(x_value, static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
    if (exponent < 0) power = power.reciprocal();
    sum += evaluate(t.coeff, Rational(n_value)) * power;
  }
  return sum;
}

Rational instantiate(const GeomRational& g, std::int64_t n_value, const Rational& x_value) {
  return instantiate(g.numerator, n_value, x_value) / pow(x_value - 1, g.denom_power);
}

}  // namespace powersum
