#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "nilrad/matrix.hpp"

namespace nilrad {

/// Linear subspace of F^ambient kept in reduced row-echelon form, so equal
/// subspaces have equal basis lists. Leading coefficients are 1, pivots
/// strictly increase, and every other row is zero at each pivot coordinate.
class Subspace {
 public:
  Subspace(const Field& f, std::size_t ambient);

  /// Inserts v into the span; returns true iff the dimension grew.
  bool insert(std::vector<Scalar> v);

  bool contains(std::vector<Scalar> v) const;

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  const Field& field() const { return field_; }

  const std::vector<std::vector<Scalar>>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  /// Growth guard: largest scalar bit length seen among inserted vectors and
  /// stored rows.
  std::size_t max_bits() const { return max_bits_; }

 private:
  std::size_t ambient_;
  Field field_;
  std::vector<std::vector<Scalar>> rows_;  // sorted by pivot
  std::vector<std::size_t> pivots_;
  std::size_t max_bits_ = 0;

  void reduce(std::vector<Scalar>& v) const;
  void track(const std::vector<Scalar>& v);
};

/// Coordinate order for vectorized d x d matrices: entries sorted by diagonal
/// offset j - i ascending, then by row ascending. Pivots of echelon bases then
/// align with the diagonal-degree filtration.
std::size_t vec_index(std::size_t d, std::size_t i, std::size_t j);
std::pair<std::size_t, std::size_t> vec_position(std::size_t d, std::size_t idx);
std::vector<Scalar> vectorize(const Matrix& square);
Matrix unvectorize(const Field& f, std::size_t d, const std::vector<Scalar>& v);

/// Echelon subspace of the space of d x d matrices.
class MatrixSubspace {
 public:
  MatrixSubspace(const Field& f, std::size_t d);

  bool insert(const Matrix& m);
  bool contains(const Matrix& m) const;

  std::size_t dim() const { return sp_.dim(); }
  std::size_t matrix_dim() const { return d_; }
  const Field& field() const { return sp_.field(); }

  Matrix basis_matrix(std::size_t r) const;
  /// Diagonal offset of row r's pivot coordinate (its leading diagonal).
  int pivot_offset(std::size_t r) const;

  const Subspace& vectors() const { return sp_; }
  std::size_t max_bits() const { return sp_.max_bits(); }

  bool operator==(const MatrixSubspace& o) const { return d_ == o.d_ && sp_ == o.sp_; }
  bool operator!=(const MatrixSubspace& o) const { return !(*this == o); }

 private:
  std::size_t d_;
  Subspace sp_;
};

}  // namespace nilrad
