#include "nilrad/subspace.hpp"

#include <algorithm>

namespace nilrad {

Subspace::Subspace(const Field& f, std::size_t ambient) : ambient_(ambient), field_(f) {}

void Subspace::track(const std::vector<Scalar>& v) {
  for (const Scalar& s : v)
    if (!s.is_zero()) max_bits_ = std::max(max_bits_, s.bit_size());
}

void Subspace::reduce(std::vector<Scalar>& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (v[p].is_zero()) continue;
    const Scalar c = v[p];
    const std::vector<Scalar>& row = rows_[r];
    for (std::size_t j = p; j < ambient_; ++j) {
      if (row[j].is_zero()) continue;
      v[j] -= c * row[j];
    }
  }
}

bool Subspace::insert(std::vector<Scalar> v) {
  if (v.size() != ambient_) throw DimensionError("subspace: vector has wrong ambient dimension");
  track(v);
  reduce(v);
  std::size_t p = 0;
  while (p < ambient_ && v[p].is_zero()) ++p;
  if (p == ambient_) return false;
  const Scalar inv = v[p].inverse();
  for (std::size_t j = p; j < ambient_; ++j)
    if (!v[j].is_zero()) v[j] *= inv;
  // Eliminate the new pivot from existing rows.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::vector<Scalar>& row = rows_[r];
    if (row[p].is_zero()) continue;
    const Scalar c = row[p];
    for (std::size_t j = p; j < ambient_; ++j) {
      if (v[j].is_zero()) continue;
      row[j] -= c * v[j];
    }
  }
  const auto it = std::upper_bound(pivots_.begin(), pivots_.end(), p);
  const std::size_t pos = static_cast<std::size_t>(it - pivots_.begin());
  track(v);
  pivots_.insert(it, p);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  return true;
}

bool Subspace::contains(std::vector<Scalar> v) const {
  if (v.size() != ambient_) throw DimensionError("subspace: vector has wrong ambient dimension");
  reduce(v);
  for (const Scalar& s : v)
    if (!s.is_zero()) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && field_ == o.field_ && pivots_ == o.pivots_ && rows_ == o.rows_;
}

std::size_t vec_index(std::size_t d, std::size_t i, std::size_t j) {
  const long t = static_cast<long>(j) - static_cast<long>(i);
  std::size_t base = 0;
  for (long s = -(static_cast<long>(d) - 1); s < t; ++s)
    base += d - static_cast<std::size_t>(s < 0 ? -s : s);
  const std::size_t first_row = t < 0 ? static_cast<std::size_t>(-t) : 0;
  return base + (i - first_row);
}

std::pair<std::size_t, std::size_t> vec_position(std::size_t d, std::size_t idx) {
  for (long t = -(static_cast<long>(d) - 1); t <= static_cast<long>(d) - 1; ++t) {
    const std::size_t len = d - static_cast<std::size_t>(t < 0 ? -t : t);
    if (idx < len) {
      const std::size_t first_row = t < 0 ? static_cast<std::size_t>(-t) : 0;
      const std::size_t i = first_row + idx;
      return {i, static_cast<std::size_t>(static_cast<long>(i) + t)};
    }
    idx -= len;
  }
  throw DimensionError("vec_position: index out of range");
}

std::vector<Scalar> vectorize(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("vectorize needs a square matrix");
  const std::size_t d = m.rows();
  std::vector<Scalar> v;
  v.reserve(d * d);
  for (long t = -(static_cast<long>(d) - 1); t <= static_cast<long>(d) - 1; ++t) {
    const std::size_t first_row = t < 0 ? static_cast<std::size_t>(-t) : 0;
    const std::size_t len = d - static_cast<std::size_t>(t < 0 ? -t : t);
    for (std::size_t i = first_row; i < first_row + len; ++i)
      v.push_back(m.at(i, static_cast<std::size_t>(static_cast<long>(i) + t)));
  }
  return v;
}

Matrix unvectorize(const Field& f, std::size_t d, const std::vector<Scalar>& v) {
  if (v.size() != d * d) throw DimensionError("unvectorize: wrong length");
  Matrix m(f, d, d);
  std::size_t idx = 0;
  for (long t = -(static_cast<long>(d) - 1); t <= static_cast<long>(d) - 1; ++t) {
    const std::size_t first_row = t < 0 ? static_cast<std::size_t>(-t) : 0;
    const std::size_t len = d - static_cast<std::size_t>(t < 0 ? -t : t);
    for (std::size_t i = first_row; i < first_row + len; ++i)
      m.at(i, static_cast<std::size_t>(static_cast<long>(i) + t)) = v[idx++];
  }
  return m;
}

MatrixSubspace::MatrixSubspace(const Field& f, std::size_t d) : d_(d), sp_(f, d * d) {}

bool MatrixSubspace::insert(const Matrix& m) {
  if (m.rows() != d_ || m.cols() != d_) throw DimensionError("matrix subspace: size mismatch");
  return sp_.insert(vectorize(m));
}

bool MatrixSubspace::contains(const Matrix& m) const {
  if (m.rows() != d_ || m.cols() != d_) throw DimensionError("matrix subspace: size mismatch");
  return sp_.contains(vectorize(m));
}

Matrix MatrixSubspace::basis_matrix(std::size_t r) const {
  return unvectorize(sp_.field(), d_, sp_.basis().at(r));
}

int MatrixSubspace::pivot_offset(std::size_t r) const {
  const auto [i, j] = vec_position(d_, sp_.pivots().at(r));
  return static_cast<int>(j) - static_cast<int>(i);
}

}  // namespace nilrad
