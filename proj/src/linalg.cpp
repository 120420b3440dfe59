#include "powersum/linalg.hpp"

#include <stdexcept>
#include <utility>

#include <boost/multiprecision/integer.hpp>

namespace powersum {

namespace {

void check_system(const Matrix& m, std::span<const Rational> b) {
  if (!m.is_square()) throw std::invalid_argument("matrix is not square");
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length does not match matrix");
}

using IntMatrix = std::vector<std::vector<Integer>>;

// Rows of `m` (optionally augmented with b) multiplied through by the lcm of
// their denominators. Returns the product of the row scales.
Integer clear_denominators(const Matrix& m, std::span<const Rational> b, IntMatrix& out) {
  Integer scale_product = 1;
  out.assign(m.rows(), {});
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer lcm = 1;
    auto fold = [&](const Rational& v) { lcm = boost::multiprecision::lcm(lcm, v.den()); };
    for (std::size_t c = 0; c < m.cols(); ++c) fold(m(r, c));
    if (!b.empty()) fold(b[r]);
    auto& row = out[r];
    row.reserve(m.cols() + (b.empty() ? 0 : 1));
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).num() * (lcm / m(r, c).den()));
    if (!b.empty()) row.push_back(b[r].num() * (lcm / b[r].den()));
    scale_product *= lcm;
  }
  return scale_product;
}

// In-place Bareiss elimination over the leading n columns; trailing columns
// are carried along. Every division is exact. Returns the sign of the row
// permutation, or 0 when the leading block is singular.
int bareiss(IntMatrix& m, std::size_t n) {
  int sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    const Integer& p = m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      auto& row = m[i];
      for (std::size_t j = k + 1; j < row.size(); ++j) {
        row[j] = (row[j] * p - row[k] * m[k][j]) / previous;
      }
      row[k] = 0;
    }
    previous = p;
  }
  return sign;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::with_column(std::size_t col, std::span<const Rational> values) const {
  if (values.size() != rows_) throw std::invalid_argument("column length does not match matrix");
  Matrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r) out(r, col) = values[r];
  return out;
}

std::vector<Rational> operator*(const Matrix& m, std::span<const Rational> v) {
  if (v.size() != m.cols()) throw std::invalid_argument("vector length does not match matrix");
  std::vector<Rational> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  }
  return out;
}

Matrix vandermonde(unsigned d) {
  const std::size_t size = d + 1;
  Matrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    Rational node = static_cast<unsigned>(i + 1);
    Rational power = node;
    for (std::size_t j = 0; j < size; ++j) {
      m(i, j) = power;
      power *= node;
    }
  }
  return m;
}

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("matrix is not square");
  if (m.rows() == 0) return 1;
  IntMatrix work;
  const Integer scale = clear_denominators(m, {}, work);
  const int sign = bareiss(work, m.rows());
  if (sign == 0) return 0;
  const Integer& det = work.back().back();
  return Rational(sign > 0 ? det : Integer(-det), scale);
}

std::vector<Rational> cramer_solve(const Matrix& m, std::span<const Rational> b) {
  check_system(m, b);
  const Rational det = determinant(m);
  if (det.is_zero()) throw std::domain_error("singular system");
  std::vector<Rational> x;
  x.reserve(m.cols());
  for (std::size_t i = 0; i < m.cols(); ++i) {
    x.push_back(determinant(m.with_column(i, b)) / det);
  }
  return x;
}

std::vector<Rational> gauss_solve(const Matrix& m, std::span<const Rational> b) {
  check_system(m, b);
  const std::size_t n = m.rows();
  IntMatrix aug;
  clear_denominators(m, b, aug);
  if (bareiss(aug, n) == 0) throw std::domain_error("singular system");

  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = aug[i][n];
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(aug[i][j]) * x[j];
    x[i] = acc / Rational(aug[i][i]);
  }
  return x;
}

}  // namespace powersum
