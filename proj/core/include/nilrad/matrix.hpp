#pragma once

#include <cstddef>
#include <vector>

#include "nilrad/scalar.hpp"

namespace nilrad {

/// Dense matrix over one field, row major. Indices are 0-based.
class Matrix {
 public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols);

  static Matrix zero(const Field& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);
  /// n x n with a single 1 at (i, j).
  static Matrix unit(const Field& f, std::size_t n, std::size_t i, std::size_t j);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& at(std::size_t i, std::size_t j);
  const Scalar& at(std::size_t i, std::size_t j) const;

  bool is_zero() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::size_t max_bit_size() const;

 private:
  std::size_t rows_, cols_;
  Field field_;
  std::vector<Scalar> e_;
};

/// Commutator ab - ba. Throws DimensionError unless a, b are square of one
/// size over one field.
Matrix bracket(const Matrix& a, const Matrix& b);

/// Exact rank: fraction-free (Bareiss) elimination over Q after clearing row
/// denominators, plain Gaussian elimination over F_p.
std::size_t rank(const Matrix& a);

struct LinearSolution {
  bool solvable = false;
  bool unique = false;
  std::vector<Scalar> x;  // free variables set to zero
};

/// Exact solution of A x = b by Gauss-Jordan elimination.
LinearSolution solve_linear(const Matrix& a, const std::vector<Scalar>& b);

}  // namespace nilrad
