#include "nilrad/matrix.hpp"

#include <string>

namespace nilrad {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), field_(f), e_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::zero(const Field& f, std::size_t rows, std::size_t cols) {
  return Matrix(f, rows, cols);
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::unit(const Field& f, std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(f, n, n);
  m.at(i, j) = Scalar::one(f);
  return m;
}

Scalar& Matrix::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
  return e_[i * cols_ + j];
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
  return e_[i * cols_ + j];
}

bool Matrix::is_zero() const {
  for (const Scalar& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

namespace {
void check_same_shape(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw DimensionError("matrix field mismatch");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("matrix size mismatch: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
}
}  // namespace

Matrix Matrix::operator+(const Matrix& o) const {
  check_same_shape(*this, o);
  Matrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same_shape(*this, o);
  Matrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (Scalar& s : r.e_) s = -s;
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (field_ != o.field_) throw DimensionError("matrix field mismatch");
  if (cols_ != o.rows_) throw DimensionError("matrix product size mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t l = 0; l < cols_; ++l) {
      const Scalar& ail = e_[i * cols_ + l];
      if (ail.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& blj = o.e_[l * o.cols_ + j];
        if (blj.is_zero()) continue;
        r.e_[i * o.cols_ + j] += ail * blj;
      }
    }
  }
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (Scalar& s : r.e_) s *= c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
  return e_ == o.e_;
}

std::size_t Matrix::max_bit_size() const {
  std::size_t m = 0;
  for (const Scalar& s : e_)
    if (!s.is_zero() && s.bit_size() > m) m = s.bit_size();
  return m;
}

Matrix bracket(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square()) throw DimensionError("bracket needs square matrices");
  check_same_shape(a, b);
  return a * b - b * a;
}

namespace {

std::size_t rank_rational(const Matrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  // Clear denominators row by row so Bareiss runs on integers.
  std::vector<std::vector<mpz_class>> w(m, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < m; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& q = a.at(i, j).rational();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& q = a.at(i, j).rational();
      mpz_class f;
      mpz_divexact(f.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
      w[i][j] = q.get_num() * f;
    }
  }
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && w[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(w[piv], w[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        mpz_class t = w[r][c] * w[i][j] - w[i][c] * w[r][j];
        mpz_divexact(w[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      w[i][c] = 0;
    }
    prev = w[r][c];
    ++r;
  }
  return r;
}

std::size_t rank_prime(const Matrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::vector<Scalar>> w(m, std::vector<Scalar>(n, Scalar::zero(a.field())));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i][j] = a.at(i, j);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && w[piv][c].is_zero()) ++piv;
    if (piv == m) continue;
    std::swap(w[piv], w[r]);
    const Scalar inv = w[r][c].inverse();
    for (std::size_t i = r + 1; i < m; ++i) {
      if (w[i][c].is_zero()) continue;
      const Scalar f = w[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) w[i][j] -= f * w[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return a.field().is_rational() ? rank_rational(a) : rank_prime(a);
}

LinearSolution solve_linear(const Matrix& a, const std::vector<Scalar>& b) {
  const std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m) throw DimensionError("solve_linear: rhs size mismatch");
  const Field f = a.field();
  // Augmented Gauss-Jordan.
  std::vector<std::vector<Scalar>> w(m, std::vector<Scalar>(n + 1, Scalar::zero(f)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i][j] = a.at(i, j);
    w[i][n] = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && w[piv][c].is_zero()) ++piv;
    if (piv == m) continue;
    std::swap(w[piv], w[r]);
    const Scalar inv = w[r][c].inverse();
    for (std::size_t j = c; j <= n; ++j) w[r][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || w[i][c].is_zero()) continue;
      const Scalar fct = w[i][c];
      for (std::size_t j = c; j <= n; ++j) w[i][j] -= fct * w[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  LinearSolution sol;
  for (std::size_t i = r; i < m; ++i)
    if (!w[i][n].is_zero()) return sol;  // inconsistent
  sol.solvable = true;
  sol.unique = (r == n);
  sol.x.assign(n, Scalar::zero(f));
  for (std::size_t i = 0; i < r; ++i) sol.x[pivot_col[i]] = w[i][n];
  return sol;
}

}  // namespace nilrad
