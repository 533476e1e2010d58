#pragma once

#include <string>
#include <vector>

#include "nilrad/blockstruct.hpp"

namespace nilrad {

/// Matrix realization R of the rank-n generator space: R(x) = D(alpha,
/// lambda) and R(v_j) = (ad R(x) - lambda)^j E(S). The shape's k blocks play
/// the role of ell + 1.
struct RepSpec {
  int n = 0;
  Scalar lambda;
  Scalar alpha;
  Shape shape;
  BlockSeq seq;
  Matrix x_image;
  std::vector<Matrix> v_images;  // v_0 .. v_{n-1}
  /// True when max{d_i + d_{i+1}} = n + 1 exactly (the uniserial stratum).
  bool boundary = false;
};

/// Builds the representation data and checks the defining relations,
/// including the step-n vanishing (ad R(x) - lambda)^n R(v_0) = 0. Shapes
/// with max{d_i + d_{i+1}} > n + 1 are rejected with AdmissibilityError.
RepSpec build_rep(int n, const Scalar& lambda, const Scalar& alpha, const BlockSeq& seq);

/// Superdiagonal criterion: for every i either R(x)_{i,i+1} or R(v_0)_{i,i+1}
/// is nonzero.
bool verify_uniserial(const RepSpec& rep);

/// Largest ell for which the representation is a relatively faithful
/// g_{n,lambda,ell} representation: the nilpotency degree of n(S). Requires
/// lambda != 0.
int quotient_level(const RepSpec& rep);

enum class EnumMode { free_alg, ell_step };

struct ClassRecord {
  int k = 0;
  Shape shape;
  bool extreme = false;  // shape admits the clause-(4) stratum: requires a phi-invariant S family
  int ell = 0;
  std::string admissible_for;  // "g_n_lambda" or "g_n_lambda_ell"
};

/// All shapes with |d| = dim_total and max{d_i + d_{i+1}} = n + 1; in
/// ell_step mode additionally the clause (3)/(4) constraints for the given
/// ell, with extreme-type flags on the k = ell + 2 stratum.
std::vector<ClassRecord> enumerate_shapes(int n, int dim_total, EnumMode mode, int ell = 0);

/// Normal forms are complete invariants: two uniserial representations are
/// non-isomorphic iff their (shape, alpha, normalized sequence) triples
/// differ. Un-normalized inputs are normalized first. Requires lambda != 0.
bool distinct_normal_forms(const RepSpec& a, const RepSpec& b);

}  // namespace nilrad
