#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "nilrad/blockstruct.hpp"
#include "nilrad/subspace.hpp"

namespace nilrad {

/// Everything computed for one n(S): generators, closed basis, lower central
/// series dimensions, nilpotency degree and graded structure.
struct NilReport {
  Shape shape;
  BlockSeq seq;
  Field field;

  std::vector<Matrix> generators;  // E^(0), ..., E^(rho)
  int rho = 0;
  /// Over char 0 this equals rho + 1; over F_p dependent generators are
  /// counted out instead of asserted away.
  int independent_generators = 0;

  MatrixSubspace basis;
  std::vector<int> lcs_dims;  // dim n^0, dim n^1, ..., 0
  int degree = 0;             // min m with n^m = 0; abelian nonzero = 1

  /// Diagonal-degree t -> dimension. Homogeneous component dimensions when
  /// graded_basis (always for canonical S), filtration quotient dimensions
  /// otherwise.
  std::map<int, int> graded_dims;
  bool graded_basis = false;

  /// Block-degree b -> dimension (block-degree grades n(S) for every S).
  std::map<int, int> block_graded_dims;

  std::size_t max_scalar_bits = 0;
};

/// E^(l)(S) = (ad D(0,0))^l E(S) for l = 0..rho, rho = max{d_i + d_{i+1} - 2}.
std::vector<Matrix> nil_generators(const BlockSeq& seq);

/// Span of the generators closed under bracketing with the generators
/// (left-normed words span the generated subalgebra).
MatrixSubspace lie_closure(const std::vector<Matrix>& generators);

NilReport generate_nilradical(const BlockSeq& seq);

/// n^0 = span(basis) down to the first zero term. By default verifies that
/// the basis is stable under bracketing with the generators and throws
/// ClosureError otherwise.
std::vector<MatrixSubspace> lower_central_series(const MatrixSubspace& basis,
                                                 const std::vector<Matrix>& generators,
                                                 bool verify_closed = true);

/// Span of all brackets of h = span{D(alpha,lambda)} + n(S); equals n(S)
/// whenever lambda != 0.
MatrixSubspace derived_algebra(const BlockSeq& seq, const Scalar& alpha, const Scalar& lambda);

/// Minimal nonzero block ranks r_{i,j} of h(0,0,C), computed per
/// diagonal-degree component as the minimum support weight of a nonzero
/// vector of the projected code. Keys are 0-based block pairs (i, j), i < j.
struct RankTable {
  Shape shape;
  std::map<std::pair<int, int>, int> entries;
  std::map<std::pair<int, int>, Matrix> witnesses;  // only for nonzero entries
  /// Set when a randomized inhomogeneous probe beat the homogeneous minimum
  /// somewhere (never observed for canonical sequences; reported, not fixed).
  bool probe_discrepancy = false;

  int at(int i, int j) const;
};

/// Canonical sequences only; throws UnsupportedError otherwise. The optional
/// probe draws random inhomogeneous elements as an upper-bound cross-check.
RankTable rank_table(const Shape& shape, const Field& field, int probe_samples = 4,
                     std::uint64_t probe_seed = 1);

/// Same, reusing an already computed report (must be canonical).
RankTable rank_table_from_report(const NilReport& report, int probe_samples = 4,
                                 std::uint64_t probe_seed = 1);

/// Accessor mandated by the data model: diagonal-degree dimension table.
inline const std::map<int, int>& graded_dims(const NilReport& r) { return r.graded_dims; }

}  // namespace nilrad
