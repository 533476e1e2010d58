#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nilrad/matrix.hpp"

namespace nilrad {

/// Block-size vector d = (d_1, ..., d_k), k >= 2, all entries positive.
/// Blocks are indexed 0-based in code; serialized forms keep the 1-based
/// convention of the data model.
class Shape {
 public:
  explicit Shape(std::vector<int> sizes);

  int k() const { return static_cast<int>(d_.size()); }
  int total() const { return total_; }
  int size(int b) const { return d_.at(static_cast<std::size_t>(b)); }
  /// First (0-based) row/column of block b.
  int offset(int b) const { return off_.at(static_cast<std::size_t>(b)); }
  const std::vector<int>& sizes() const { return d_; }

  bool all_ones() const;
  bool is_symmetric() const;
  /// Symmetric with odd k and odd middle entry.
  bool is_odd_symmetric() const;

  /// Canonical key, e.g. "1,2,1"; used for ordering manifests.
  std::string key() const;

  bool operator==(const Shape& o) const { return d_ == o.d_; }
  bool operator!=(const Shape& o) const { return d_ != o.d_; }

 private:
  std::vector<int> d_;
  std::vector<int> off_;
  int total_ = 0;
};

/// Inter-block sequence S = (S(1), ..., S(k-1)), S(i) of size d_i x d_{i+1},
/// with the standing admissibility condition S(i)[d_i, 1] != 0.
class BlockSeq {
 public:
  BlockSeq(Shape shape, Field field, std::vector<Matrix> blocks);

  /// Single 1 in the bottom-left corner of every block.
  static BlockSeq canonical(const Shape& shape, const Field& field);

  const Shape& shape() const { return shape_; }
  const Field& field() const { return field_; }
  const Matrix& block(int i) const { return blocks_.at(static_cast<std::size_t>(i)); }
  const std::vector<Matrix>& blocks() const { return blocks_; }

  bool operator==(const BlockSeq& o) const;
  bool operator!=(const BlockSeq& o) const { return !(*this == o); }

 private:
  Shape shape_;
  Field field_;
  std::vector<Matrix> blocks_;
};

/// D(alpha, lambda): block diagonal of upper Jordan blocks J^{d_i}(alpha-(i-1)lambda).
Matrix build_D(const Shape& shape, const Scalar& alpha, const Scalar& lambda);

/// E(S): S(i) placed at block (i, i+1), zero elsewhere.
Matrix build_E(const BlockSeq& seq);

/// The (i, j) block of a (0-based block indices).
Matrix block_project(const Shape& shape, const Matrix& a, int i, int j);

/// Component of a on diagonal offset t (entries with col - row == t).
Matrix diag_component(const Matrix& a, int t);

/// Zero out every block whose block-degree j - i differs from b.
Matrix block_component(const Shape& shape, const Matrix& a, int b);

/// Least diagonal offset carrying a nonzero entry. Throws on the zero matrix.
int ddeg(const Matrix& a);

/// phi(A)_{i,j} = (-1)^{i-j+1} A_{d+1-j,d+1-i}; the automorphism -K A^T K^{-1}.
Matrix phi_map(const Matrix& a);

bool is_normalized(const BlockSeq& seq);
bool is_weakly_normalized(const BlockSeq& seq);

/// True iff phi(E(S)) == E(S); only symmetric shapes can satisfy this.
bool is_phi_invariant(const BlockSeq& seq);

/// Element of the normalization group G(d): P = P_1 + ... + P_k block
/// diagonal with P_i a polynomial in J^{d_i}(0), nonzero constant term.
class GroupElem {
 public:
  GroupElem(Shape shape, Field field, std::vector<std::vector<Scalar>> polys);

  static GroupElem identity(const Shape& shape, const Field& field);

  const Shape& shape() const { return shape_; }
  const Field& field() const { return field_; }
  const std::vector<std::vector<Scalar>>& polys() const { return polys_; }

  Matrix to_matrix() const;
  Matrix inverse_matrix() const;
  bool is_identity() const;

 private:
  Shape shape_;
  Field field_;
  std::vector<std::vector<Scalar>> polys_;  // polys_[i] has d_i coefficients, polys_[i][0] != 0
};

struct NormalizeResult {
  GroupElem gauge;
  BlockSeq normalized;
  /// False when some elimination level was solvable but not uniquely; the
  /// free coefficients were fixed to zero.
  bool unique = true;
};

/// The unique G(d)-conjugation taking S to a normalized sequence. Levels are
/// solved by diagonal offset: level 0 fixes the corner chain through
/// c_{1,0} = 1, c_{i+1,0} = c_{i,0} S(i)[d_i,1]; level m >= 1 solves the
/// affine system the normalization conditions impose on the degree-m
/// coefficients of the P_i.
NormalizeResult normalize_seq(const BlockSeq& seq);

/// Blocks of P E(S) P^{-1}; stays a valid admissible sequence.
BlockSeq conjugate_seq(const BlockSeq& seq, const GroupElem& p);

enum class SeqConstraint { none, weakly_normalized, normalized, normalized_phi_invariant };

std::string to_string(SeqConstraint c);

/// Deterministic in (seed, shape, field, constraint); integer entries bounded
/// by entry_bound. Throws ConstraintError when the constraint is infeasible
/// for the shape (e.g. phi-invariance on an asymmetric shape).
BlockSeq random_seq(const Shape& shape, const Field& field, std::uint64_t seed, int entry_bound,
                    SeqConstraint constraint);

GroupElem random_group_elem(const Shape& shape, const Field& field, std::uint64_t seed,
                            int entry_bound);

}  // namespace nilrad
