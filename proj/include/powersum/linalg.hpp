#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "powersum/rational.hpp"

namespace powersum {

/// Dense row-major matrix of Rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  /// Copy with column `col` replaced by `values`.
  Matrix with_column(std::size_t col, std::span<const Rational> values) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

std::vector<Rational> operator*(const Matrix& m, std::span<const Rational> v);

/// (d+1) x (d+1) matrix with entry (i, j) = i^j for 1-based i, j; the
/// interpolation system for a degree-(d+1) polynomial without constant term
/// sampled at n = 1..d+1.
Matrix vandermonde(unsigned d);

/// Bareiss fraction-free elimination. Throws std::invalid_argument for a
/// non-square matrix.
Rational determinant(const Matrix& m);

/// Cramer's rule: x_i = det(M with column i := b) / det(M).
///
/// Throws std::domain_error("singular system") when det(M) = 0 and
/// std::invalid_argument on shape mismatch.
std::vector<Rational> cramer_solve(const Matrix& m, std::span<const Rational> b);

/// Fraction-free elimination on [M | b] followed by back-substitution. Same
/// contract as cramer_solve; exists as an independent check on it.
std::vector<Rational> gauss_solve(const Matrix& m, std::span<const Rational> b);

}  // namespace powersum
