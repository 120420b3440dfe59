#include "powersum/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace powersum {

Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    pos = 1;
  }
  if (pos == text.size()) {
    throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
  }
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') {
      throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    throw std::domain_error("division by zero");
  }
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  Integer g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::reciprocal() const {
  if (is_zero()) {
    throw std::domain_error("division by zero");
  }
  return Rational(den_, num_);
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("division by zero");
  }
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  const Integer a = lhs.num_ * rhs.den_;
  const Integer b = rhs.num_ * lhs.den_;
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::fraction_string() const {
  return num_.str() + "/" + den_.str();
}

std::string Rational::to_string() const {
  return is_integer() ? num_.str() : fraction_string();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(den_text));
}

Rational make_rational(Integer num, Integer den) {
  return Rational(std::move(num), std::move(den));
}

Rational pow(Rational base, unsigned exponent) {
  Rational result = 1;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace powersum
