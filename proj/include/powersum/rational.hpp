#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace powersum {

using Integer = boost::multiprecision::cpp_int;

/// Parses an optionally signed decimal integer. Throws std::invalid_argument
/// on anything else (no whitespace, no leading '+').
Integer parse_integer(std::string_view text);

/// Exact fraction num/den, always stored reduced with den > 0.
///
/// Zero is 0/1. Every constructor normalizes, so two Rationals are equal
/// exactly when their numerators and denominators are.
class Rational {
 public:
  Rational() = default;
  Rational(Integer value) : num_(std::move(value)) {}  // NOLINT(implicit)
  template <std::integral T>
  Rational(T value) : num_(value) {}  // NOLINT(implicit)

  /// Throws std::domain_error("division by zero") when den == 0.
  Rational(Integer num, Integer den);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  Rational reciprocal() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  /// Strict "p/q" form, used on every machine-readable surface ("0/1", "5/1").
  std::string fraction_string() const;
  /// Human form: integers drop the "/1".
  std::string to_string() const;

  /// Accepts "p/q" or a bare integer "p"; the result is reduced.
  static Rational parse(std::string_view text);

 private:
  void normalize();

  Integer num_{0};
  Integer den_{1};
};

Rational make_rational(Integer num, Integer den);

Rational pow(Rational base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace powersum
