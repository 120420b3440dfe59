#pragma once

#include <cstdint>
#include <utility>

#include "powersum/rational.hpp"

namespace powersum {

/// a + b sqrt(5) with rational a, b.
class Surd5 {
 public:
  Surd5() = default;
  Surd5(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }

  /// a - b sqrt(5).
  Surd5 conjugate() const { return {a_, -b_}; }

  friend Surd5 operator+(const Surd5& x, const Surd5& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend Surd5 operator-(const Surd5& x, const Surd5& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend Surd5 operator*(const Surd5& x, const Surd5& y) {
    return {x.a_ * y.a_ + Rational(5) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }

  friend bool operator==(const Surd5&, const Surd5&) = default;

 private:
  Rational a_;
  Rational b_;
};

Surd5 pow(Surd5 base, std::uint64_t exponent);

/// a0 (1 + r + ... + r^n); a0 (n + 1) when r = 1.
Rational geometric_sum(const Rational& a0, const Rational& r, std::uint64_t n);

/// F_n by fast doubling.
Integer fib_doubling(std::uint64_t n);

/// F_n from Binet's formula evaluated exactly in Q(sqrt 5). Throws
/// std::logic_error if the result is not an integer.
Integer fib_binet(std::uint64_t n);

/// (F_1^2 + ... + F_n^2, F_n F_{n+1}). Both components agree.
std::pair<Integer, Integer> fib_square_sum(std::uint64_t n);

}  // namespace powersum
