#include "nilrad/blockstruct.hpp"

#include <algorithm>
#include <numeric>

#include "nilrad/rng.hpp"

namespace nilrad {

Shape::Shape(std::vector<int> sizes) : d_(std::move(sizes)) {
  if (d_.size() < 2) throw AdmissibilityError("shape needs k >= 2 blocks");
  off_.reserve(d_.size());
  for (int s : d_) {
    if (s <= 0) throw AdmissibilityError("shape entries must be positive");
    off_.push_back(total_);
    total_ += s;
  }
}

bool Shape::all_ones() const {
  return std::all_of(d_.begin(), d_.end(), [](int s) { return s == 1; });
}

bool Shape::is_symmetric() const {
  const int n = k();
  for (int i = 0; i < n / 2; ++i)
    if (d_[static_cast<std::size_t>(i)] != d_[static_cast<std::size_t>(n - 1 - i)]) return false;
  return true;
}

bool Shape::is_odd_symmetric() const {
  return is_symmetric() && k() % 2 == 1 && size(k() / 2) % 2 == 1;
}

std::string Shape::key() const {
  std::string s;
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(d_[i]);
  }
  return s;
}

BlockSeq::BlockSeq(Shape shape, Field field, std::vector<Matrix> blocks)
    : shape_(std::move(shape)), field_(field), blocks_(std::move(blocks)) {
  const int k = shape_.k();
  if (static_cast<int>(blocks_.size()) != k - 1)
    throw AdmissibilityError("sequence needs exactly k-1 blocks");
  for (int b = 0; b < k - 1; ++b) {
    const Matrix& m = blocks_[static_cast<std::size_t>(b)];
    if (m.field() != field_) throw DimensionError("sequence block field mismatch");
    if (static_cast<int>(m.rows()) != shape_.size(b) ||
        static_cast<int>(m.cols()) != shape_.size(b + 1))
      throw AdmissibilityError("S(" + std::to_string(b + 1) + ") must be " +
                               std::to_string(shape_.size(b)) + "x" +
                               std::to_string(shape_.size(b + 1)));
    if (m.at(static_cast<std::size_t>(shape_.size(b) - 1), 0).is_zero())
      throw AdmissibilityError("admissibility condition S(i)_{d_i,1} != 0 fails at i = " +
                               std::to_string(b + 1));
  }
}

BlockSeq BlockSeq::canonical(const Shape& shape, const Field& field) {
  std::vector<Matrix> blocks;
  for (int b = 0; b + 1 < shape.k(); ++b) {
    Matrix m(field, static_cast<std::size_t>(shape.size(b)),
             static_cast<std::size_t>(shape.size(b + 1)));
    m.at(static_cast<std::size_t>(shape.size(b) - 1), 0) = Scalar::one(field);
    blocks.push_back(std::move(m));
  }
  return BlockSeq(shape, field, std::move(blocks));
}

bool BlockSeq::operator==(const BlockSeq& o) const {
  return shape_ == o.shape_ && field_ == o.field_ && blocks_ == o.blocks_;
}

Matrix build_D(const Shape& shape, const Scalar& alpha, const Scalar& lambda) {
  if (alpha.field() != lambda.field()) throw DimensionError("alpha/lambda field mismatch");
  const Field f = alpha.field();
  const std::size_t d = static_cast<std::size_t>(shape.total());
  Matrix m(f, d, d);
  Scalar eig = alpha;
  for (int b = 0; b < shape.k(); ++b) {
    const std::size_t o = static_cast<std::size_t>(shape.offset(b));
    const std::size_t s = static_cast<std::size_t>(shape.size(b));
    for (std::size_t i = 0; i < s; ++i) {
      m.at(o + i, o + i) = eig;
      if (i + 1 < s) m.at(o + i, o + i + 1) = Scalar::one(f);
    }
    eig -= lambda;
  }
  return m;
}

Matrix build_E(const BlockSeq& seq) {
  const Shape& sh = seq.shape();
  const std::size_t d = static_cast<std::size_t>(sh.total());
  Matrix m(seq.field(), d, d);
  for (int b = 0; b + 1 < sh.k(); ++b) {
    const Matrix& s = seq.block(b);
    const std::size_t ro = static_cast<std::size_t>(sh.offset(b));
    const std::size_t co = static_cast<std::size_t>(sh.offset(b + 1));
    for (std::size_t i = 0; i < s.rows(); ++i)
      for (std::size_t j = 0; j < s.cols(); ++j) m.at(ro + i, co + j) = s.at(i, j);
  }
  return m;
}

Matrix block_project(const Shape& shape, const Matrix& a, int i, int j) {
  if (i < 0 || j < 0 || i >= shape.k() || j >= shape.k())
    throw DimensionError("block index out of range");
  if (static_cast<int>(a.rows()) != shape.total() || !a.is_square())
    throw DimensionError("matrix does not match shape");
  Matrix m(a.field(), static_cast<std::size_t>(shape.size(i)),
           static_cast<std::size_t>(shape.size(j)));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      m.at(r, c) = a.at(static_cast<std::size_t>(shape.offset(i)) + r,
                        static_cast<std::size_t>(shape.offset(j)) + c);
  return m;
}

Matrix diag_component(const Matrix& a, int t) {
  if (!a.is_square()) throw DimensionError("diag_component needs a square matrix");
  Matrix m(a.field(), a.rows(), a.cols());
  const long n = static_cast<long>(a.rows());
  for (long i = 0; i < n; ++i) {
    const long j = i + t;
    if (j >= 0 && j < n)
      m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  return m;
}

Matrix block_component(const Shape& shape, const Matrix& a, int b) {
  Matrix m(a.field(), a.rows(), a.cols());
  for (int i = 0; i < shape.k(); ++i) {
    const int j = i + b;
    if (j < 0 || j >= shape.k()) continue;
    for (int r = 0; r < shape.size(i); ++r)
      for (int c = 0; c < shape.size(j); ++c) {
        const auto gr = static_cast<std::size_t>(shape.offset(i) + r);
        const auto gc = static_cast<std::size_t>(shape.offset(j) + c);
        m.at(gr, gc) = a.at(gr, gc);
      }
  }
  return m;
}

int ddeg(const Matrix& a) {
  const long n = static_cast<long>(a.rows());
  for (long t = -(n - 1); t <= n - 1; ++t)
    for (long i = std::max(0l, -t); i < std::min(n, n - t); ++i)
      if (!a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i + t)).is_zero())
        return static_cast<int>(t);
  throw Error("ddeg of the zero matrix is undefined");
}

Matrix phi_map(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("phi needs a square matrix");
  const std::size_t d = a.rows();
  Matrix m(a.field(), d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      const Scalar& src = a.at(d - 1 - c, d - 1 - r);
      if (src.is_zero()) continue;
      m.at(r, c) = ((r + c) % 2 == 0) ? -src : src;  // sign (-1)^{r-c+1}, 1-based indices
    }
  return m;
}

bool is_weakly_normalized(const BlockSeq& seq) {
  const Shape& sh = seq.shape();
  const int k = sh.k();
  for (int b = 0; b < k - 1; ++b) {
    if (!seq.block(b).at(static_cast<std::size_t>(sh.size(b) - 1), 0).is_one()) return false;
  }
  for (int b = 0; b + 1 < k - 1; ++b) {
    const Matrix& s = seq.block(b);
    const Matrix& next = seq.block(b + 1);
    const int cb = sh.size(b + 1);
    for (int j = 1; j <= cb; ++j) {
      if (s.at(static_cast<std::size_t>(sh.size(b) - 1), static_cast<std::size_t>(j - 1)) !=
          next.at(static_cast<std::size_t>(cb - j), 0))
        return false;
    }
  }
  return true;
}

bool is_normalized(const BlockSeq& seq) {
  if (!is_weakly_normalized(seq)) return false;
  const Shape& sh = seq.shape();
  const int k = sh.k();
  const Matrix& first = seq.block(0);
  for (int j = 1; j <= sh.size(0) - 1; ++j)
    if (!first.at(static_cast<std::size_t>(j - 1), 0).is_zero()) return false;
  const Matrix& last = seq.block(k - 2);
  for (int j = 2; j <= sh.size(k - 1); ++j)
    if (!last.at(static_cast<std::size_t>(sh.size(k - 2) - 1), static_cast<std::size_t>(j - 1))
             .is_zero())
      return false;
  return true;
}

bool is_phi_invariant(const BlockSeq& seq) {
  const Matrix e = build_E(seq);
  return phi_map(e) == e;
}

GroupElem::GroupElem(Shape shape, Field field, std::vector<std::vector<Scalar>> polys)
    : shape_(std::move(shape)), field_(field), polys_(std::move(polys)) {
  if (static_cast<int>(polys_.size()) != shape_.k())
    throw DimensionError("group element needs one polynomial per block");
  for (int b = 0; b < shape_.k(); ++b) {
    const auto& p = polys_[static_cast<std::size_t>(b)];
    if (static_cast<int>(p.size()) != shape_.size(b))
      throw DimensionError("polynomial " + std::to_string(b + 1) + " needs d_i coefficients");
    if (p[0].is_zero())
      throw AdmissibilityError("group element constant term vanishes at block " +
                               std::to_string(b + 1));
    for (const Scalar& c : p)
      if (c.field() != field_) throw DimensionError("group element field mismatch");
  }
}

GroupElem GroupElem::identity(const Shape& shape, const Field& field) {
  std::vector<std::vector<Scalar>> polys;
  for (int b = 0; b < shape.k(); ++b) {
    std::vector<Scalar> p(static_cast<std::size_t>(shape.size(b)), Scalar::zero(field));
    p[0] = Scalar::one(field);
    polys.push_back(std::move(p));
  }
  return GroupElem(shape, field, std::move(polys));
}

namespace {

// Sum of c_m N^m for the upper shift N = J^d(0).
Matrix poly_block(const Field& f, int d, const std::vector<Scalar>& coeffs) {
  Matrix m(f, static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i)
    for (int mdeg = 0; i + mdeg < d; ++mdeg)
      m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i + mdeg)) =
          coeffs[static_cast<std::size_t>(mdeg)];
  return m;
}

// Power-series inverse of the coefficient list mod N^d.
std::vector<Scalar> poly_inverse_coeffs(const Field& f, const std::vector<Scalar>& c) {
  std::vector<Scalar> e(c.size(), Scalar::zero(f));
  const Scalar inv0 = c[0].inverse();
  e[0] = inv0;
  for (std::size_t m = 1; m < c.size(); ++m) {
    Scalar acc = Scalar::zero(f);
    for (std::size_t t = 1; t <= m; ++t) acc += c[t] * e[m - t];
    e[m] = -(acc * inv0);
  }
  return e;
}

}  // namespace

Matrix GroupElem::to_matrix() const {
  const std::size_t d = static_cast<std::size_t>(shape_.total());
  Matrix m(field_, d, d);
  for (int b = 0; b < shape_.k(); ++b) {
    const Matrix pb = poly_block(field_, shape_.size(b), polys_[static_cast<std::size_t>(b)]);
    const std::size_t o = static_cast<std::size_t>(shape_.offset(b));
    for (std::size_t i = 0; i < pb.rows(); ++i)
      for (std::size_t j = 0; j < pb.cols(); ++j) m.at(o + i, o + j) = pb.at(i, j);
  }
  return m;
}

Matrix GroupElem::inverse_matrix() const {
  const std::size_t d = static_cast<std::size_t>(shape_.total());
  Matrix m(field_, d, d);
  for (int b = 0; b < shape_.k(); ++b) {
    const Matrix pb = poly_block(
        field_, shape_.size(b),
        poly_inverse_coeffs(field_, polys_[static_cast<std::size_t>(b)]));
    const std::size_t o = static_cast<std::size_t>(shape_.offset(b));
    for (std::size_t i = 0; i < pb.rows(); ++i)
      for (std::size_t j = 0; j < pb.cols(); ++j) m.at(o + i, o + j) = pb.at(i, j);
  }
  return m;
}

bool GroupElem::is_identity() const {
  for (const auto& p : polys_) {
    if (!p[0].is_one()) return false;
    for (std::size_t m = 1; m < p.size(); ++m)
      if (!p[m].is_zero()) return false;
  }
  return true;
}

BlockSeq conjugate_seq(const BlockSeq& seq, const GroupElem& p) {
  if (!(seq.shape() == p.shape())) throw DimensionError("conjugation shape mismatch");
  if (seq.field() != p.field()) throw DimensionError("conjugation field mismatch");
  const Shape& sh = seq.shape();
  const Field& f = seq.field();
  std::vector<Matrix> out;
  for (int b = 0; b + 1 < sh.k(); ++b) {
    const Matrix pb = poly_block(f, sh.size(b), p.polys()[static_cast<std::size_t>(b)]);
    const Matrix qinv = poly_block(
        f, sh.size(b + 1), poly_inverse_coeffs(f, p.polys()[static_cast<std::size_t>(b + 1)]));
    out.push_back(pb * seq.block(b) * qinv);
  }
  return BlockSeq(sh, f, std::move(out));
}

namespace {

// Residual slots of the normalization conditions at diagonal offset m+1,
// read off a conjugated sequence. Offset of entry (a, c) of S(i), 1-based,
// is d_i - a + c.
std::vector<Scalar> normalization_residuals(const BlockSeq& s, int m) {
  const Shape& sh = s.shape();
  const int k = sh.k();
  std::vector<Scalar> res;
  const int j = m + 1;  // 1-based column into a last row
  for (int b = 0; b + 1 < k - 1; ++b) {
    const int cb = sh.size(b + 1);
    if (j <= cb) {
      res.push_back(
          s.block(b).at(static_cast<std::size_t>(sh.size(b) - 1), static_cast<std::size_t>(j - 1)) -
          s.block(b + 1).at(static_cast<std::size_t>(cb - j), 0));
    }
  }
  const int row = sh.size(0) - m;  // 1-based row of S(1) first column at this offset
  if (row >= 1 && row <= sh.size(0) - 1)
    res.push_back(s.block(0).at(static_cast<std::size_t>(row - 1), 0));
  if (j >= 2 && j <= sh.size(k - 1))
    res.push_back(s.block(k - 2).at(static_cast<std::size_t>(sh.size(k - 2) - 1),
                                    static_cast<std::size_t>(j - 1)));
  return res;
}

}  // namespace

NormalizeResult normalize_seq(const BlockSeq& seq) {
  const Shape& sh = seq.shape();
  const Field& f = seq.field();
  const int k = sh.k();

  std::vector<std::vector<Scalar>> polys(static_cast<std::size_t>(k));
  for (int b = 0; b < k; ++b)
    polys[static_cast<std::size_t>(b)].assign(static_cast<std::size_t>(sh.size(b)),
                                              Scalar::zero(f));
  // Level 0: the telescoping corner chain, gauge c_{1,0} = 1.
  polys[0][0] = Scalar::one(f);
  for (int b = 0; b + 1 < k; ++b)
    polys[static_cast<std::size_t>(b + 1)][0] =
        polys[static_cast<std::size_t>(b)][0] *
        seq.block(b).at(static_cast<std::size_t>(sh.size(b) - 1), 0);

  bool unique = true;
  const int max_d = *std::max_element(sh.sizes().begin(), sh.sizes().end());

  auto eval = [&](void) {
    return conjugate_seq(seq, GroupElem(sh, f, polys));
  };

  for (int m = 1; m <= max_d - 1; ++m) {
    std::vector<int> unknowns;
    for (int b = 0; b < k; ++b)
      if (sh.size(b) > m) unknowns.push_back(b);

    const std::vector<Scalar> base = normalization_residuals(eval(), m);
    if (base.empty()) continue;
    if (unknowns.empty()) {
      for (const Scalar& r : base)
        if (!r.is_zero())
          throw InternalError("normalization: unfixable residual at level " + std::to_string(m));
      continue;
    }

    Matrix a(f, base.size(), unknowns.size());
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      auto& coeff = polys[static_cast<std::size_t>(unknowns[u])][static_cast<std::size_t>(m)];
      coeff = Scalar::one(f);
      const std::vector<Scalar> probe = normalization_residuals(eval(), m);
      coeff = Scalar::zero(f);
      for (std::size_t r = 0; r < base.size(); ++r) a.at(r, u) = probe[r] - base[r];
    }
    std::vector<Scalar> rhs;
    rhs.reserve(base.size());
    for (const Scalar& r : base) rhs.push_back(-r);
    const LinearSolution sol = solve_linear(a, rhs);
    if (!sol.solvable)
      throw InternalError("normalization level " + std::to_string(m) +
                          " produced an inconsistent system");
    unique = unique && sol.unique;
    for (std::size_t u = 0; u < unknowns.size(); ++u)
      polys[static_cast<std::size_t>(unknowns[u])][static_cast<std::size_t>(m)] = sol.x[u];
  }

  GroupElem gauge(sh, f, std::move(polys));
  BlockSeq normalized = conjugate_seq(seq, gauge);
  if (!is_normalized(normalized))
    throw InternalError("normalization did not converge to a normalized sequence");
  return NormalizeResult{std::move(gauge), std::move(normalized), unique};
}

std::string to_string(SeqConstraint c) {
  switch (c) {
    case SeqConstraint::none: return "none";
    case SeqConstraint::weakly_normalized: return "weakly_normalized";
    case SeqConstraint::normalized: return "normalized";
    case SeqConstraint::normalized_phi_invariant: return "normalized_phi_invariant";
  }
  return "?";
}

namespace {

// Union-find over block entries with a sign (parity of -1 exponent) relative
// to the parent, plus per-class value forcings. Signed unions express the
// mirror condition (2) and phi-invariance; forcings express conditions (1),
// (3) and admissibility.
class SignedClasses {
 public:
  explicit SignedClasses(std::size_t n, bool char2)
      : parent_(n), sgn_(n, 0), char2_(char2), one_parity_(n, -1), zero_(n, false),
        nonzero_(n, false) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::pair<std::size_t, int> find(std::size_t x) {
    if (parent_[x] == x) return {x, 0};
    auto [root, s] = find(parent_[x]);
    parent_[x] = root;
    sgn_[x] = (sgn_[x] + s) % 2;
    return {root, sgn_[x]};
  }

  void unite(std::size_t x, std::size_t y, int sign_parity) {
    if (char2_) sign_parity = 0;
    auto [rx, sx] = find(x);
    auto [ry, sy] = find(y);
    if (rx == ry) {
      if ((sx + sy + sign_parity) % 2 != 0) zero_[rx] = true;  // v = -v
      return;
    }
    parent_[ry] = rx;
    sgn_[ry] = ((sx + sy + sign_parity) % 2 + 2) % 2;
    merge_attrs(rx, ry);
  }

  void force_one(std::size_t x) {
    auto [r, s] = find(x);
    if (one_parity_[r] >= 0 && one_parity_[r] != s && !char2_) zero_[r] = true;
    if (one_parity_[r] < 0) one_parity_[r] = s;
  }

  void force_zero(std::size_t x) { zero_[find(x).first] = true; }
  void force_nonzero(std::size_t x) { nonzero_[find(x).first] = true; }

  struct ClassInfo {
    std::size_t root;
    int parity;     // of x relative to root
    int one_parity; // -1 when unforced
    bool zero;
    bool nonzero;
  };

  ClassInfo info(std::size_t x) {
    auto [r, s] = find(x);
    return ClassInfo{r, s, one_parity_[r], zero_[r], nonzero_[r]};
  }

 private:
  void merge_attrs(std::size_t keep, std::size_t gone) {
    if (zero_[gone]) zero_[keep] = true;
    if (nonzero_[gone]) nonzero_[keep] = true;
    if (one_parity_[gone] >= 0) {
      const int p = (one_parity_[gone] + sgn_[gone]) % 2;
      if (one_parity_[keep] >= 0 && one_parity_[keep] != p && !char2_) zero_[keep] = true;
      if (one_parity_[keep] < 0) one_parity_[keep] = p;
    }
  }

  std::vector<std::size_t> parent_;
  std::vector<int> sgn_;
  bool char2_;
  std::vector<int> one_parity_;
  std::vector<bool> zero_;
  std::vector<bool> nonzero_;
};

}  // namespace

BlockSeq random_seq(const Shape& sh, const Field& f, std::uint64_t seed, int entry_bound,
                    SeqConstraint constraint) {
  if (entry_bound < 1) throw ConstraintError("entry_bound must be >= 1");
  const int k = sh.k();
  const bool char2 = f.characteristic() == 2;
  const bool want_phi = constraint == SeqConstraint::normalized_phi_invariant;
  if (want_phi && !sh.is_symmetric())
    throw ConstraintError("phi-invariance is infeasible on the asymmetric shape " + sh.key());

  // Entry id layout: blocks in order, row major inside each block.
  std::vector<std::size_t> base(static_cast<std::size_t>(k - 1) + 1, 0);
  for (int b = 0; b < k - 1; ++b)
    base[static_cast<std::size_t>(b + 1)] =
        base[static_cast<std::size_t>(b)] +
        static_cast<std::size_t>(sh.size(b) * sh.size(b + 1));
  const std::size_t n_entries = base.back();
  const auto id = [&](int b, int a, int c) {
    return base[static_cast<std::size_t>(b)] +
           static_cast<std::size_t>(a * sh.size(b + 1) + c);
  };

  SignedClasses cls(n_entries, char2);

  const bool corner_one = constraint != SeqConstraint::none;
  for (int b = 0; b < k - 1; ++b) {
    const std::size_t corner = id(b, sh.size(b) - 1, 0);
    if (corner_one)
      cls.force_one(corner);
    else
      cls.force_nonzero(corner);
  }
  if (constraint != SeqConstraint::none) {
    // Condition (2): last row of S(i) mirrors the first column of S(i+1).
    for (int b = 0; b + 1 < k - 1; ++b) {
      const int cb = sh.size(b + 1);
      for (int j = 1; j <= cb; ++j)
        cls.unite(id(b, sh.size(b) - 1, j - 1), id(b + 1, cb - j, 0), 0);
    }
  }
  if (constraint == SeqConstraint::normalized || want_phi) {
    // Condition (3): edge vanishing on the first column / last row.
    for (int j = 1; j <= sh.size(0) - 1; ++j) cls.force_zero(id(0, j - 1, 0));
    for (int j = 2; j <= sh.size(k - 1); ++j) cls.force_zero(id(k - 2, sh.size(k - 2) - 1, j - 1));
  }
  if (want_phi) {
    const int d = sh.total();
    // Global position of entry (a, c) of block b, then its phi partner.
    for (int b = 0; b < k - 1; ++b)
      for (int a = 0; a < sh.size(b); ++a)
        for (int c = 0; c < sh.size(b + 1); ++c) {
          const int gr = sh.offset(b) + a;
          const int gc = sh.offset(b + 1) + c;
          const int pr = d - 1 - gc;
          const int pc = d - 1 - gr;
          const int pb = k - 2 - b;  // phi swaps block (b, b+1) with (k-2-b, k-1-b)
          const int pa = pr - sh.offset(pb);
          const int pcc = pc - sh.offset(pb + 1);
          if (pa < 0 || pa >= sh.size(pb) || pcc < 0 || pcc >= sh.size(pb + 1))
            throw InternalError("phi image left the superdiagonal blocks");
          const int parity = (gr + gc) % 2 == 0 ? 1 : 0;  // (-1)^{gr-gc+1} < 0 iff gr+gc even
          cls.unite(id(b, a, c), id(pb, pa, pcc), parity);
        }
  }

  DetRng rng(DetRng::derive_key(seed, {"random_seq", sh.key(), f.name(), to_string(constraint),
                                       std::to_string(entry_bound)}));
  std::vector<Scalar> value(n_entries, Scalar::zero(f));
  std::vector<char> root_done(n_entries, 0);
  std::vector<Scalar> root_value(n_entries, Scalar::zero(f));
  for (std::size_t x = 0; x < n_entries; ++x) {
    const auto ci = cls.info(x);
    if (!root_done[ci.root]) {
      Scalar v = Scalar::zero(f);
      if (ci.zero) {
        if (ci.one_parity >= 0)
          throw ConstraintError("constraint forces a corner entry to vanish on shape " + sh.key());
        if (ci.nonzero)
          throw ConstraintError("constraint forces an admissibility corner to zero on shape " +
                                sh.key());
      } else if (ci.one_parity >= 0) {
        v = ci.one_parity == 0 ? Scalar::one(f) : -Scalar::one(f);
      } else {
        do {
          v = Scalar::from_int(f, rng.int_in(-entry_bound, entry_bound));
        } while (ci.nonzero && v.is_zero());
      }
      root_value[ci.root] = v;
      root_done[ci.root] = 1;
    }
    const Scalar& rv = root_value[ci.root];
    value[x] = (ci.parity % 2 == 0) ? rv : -rv;
  }

  std::vector<Matrix> blocks;
  for (int b = 0; b < k - 1; ++b) {
    Matrix m(f, static_cast<std::size_t>(sh.size(b)), static_cast<std::size_t>(sh.size(b + 1)));
    for (int a = 0; a < sh.size(b); ++a)
      for (int c = 0; c < sh.size(b + 1); ++c)
        m.at(static_cast<std::size_t>(a), static_cast<std::size_t>(c)) = value[id(b, a, c)];
    blocks.push_back(std::move(m));
  }
  return BlockSeq(sh, f, std::move(blocks));
}

GroupElem random_group_elem(const Shape& sh, const Field& f, std::uint64_t seed, int entry_bound) {
  if (entry_bound < 1) throw ConstraintError("entry_bound must be >= 1");
  DetRng rng(DetRng::derive_key(seed, {"random_group_elem", sh.key(), f.name(),
                                       std::to_string(entry_bound)}));
  std::vector<std::vector<Scalar>> polys;
  for (int b = 0; b < sh.k(); ++b) {
    std::vector<Scalar> p;
    for (int m = 0; m < sh.size(b); ++m) {
      Scalar v = Scalar::from_int(f, rng.int_in(-entry_bound, entry_bound));
      if (m == 0) {
        while (v.is_zero()) v = Scalar::from_int(f, rng.int_in(-entry_bound, entry_bound));
      }
      p.push_back(std::move(v));
    }
    polys.push_back(std::move(p));
  }
  return GroupElem(sh, f, std::move(polys));
}

}  // namespace nilrad
