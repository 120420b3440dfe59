#include "powersum/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace powersum {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(Rational c) { return Polynomial({std::move(c)}); }

Polynomial Polynomial::monomial(Rational c, std::size_t power) {
  if (c.is_zero()) return {};
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = std::move(c);
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::variable() { return monomial(1, 1); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational{};
}

Rational Polynomial::leading_coefficient() const {
  return coeffs_.empty() ? Rational{} : coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const { return evaluate(*this, x); }

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

Rational evaluate(const Polynomial& p, const Rational& x) {
  const auto& c = p.coefficients();
  Rational acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial substitute_affine(const Polynomial& p, const Rational& scale, const Rational& shift) {
  const Polynomial inner({shift, scale});
  const auto& c = p.coefficients();
  Polynomial acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * inner + Polynomial::constant(*it);
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << c[k] << ")";
    if (k > 0) os << "*n^" << k;
    first = false;
  }
  return os;
}

}  // namespace powersum
