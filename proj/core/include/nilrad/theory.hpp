#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nilrad/nilradical.hpp"

namespace nilrad {

enum class DegreeCase { generic, all_ones, odd_symmetric_phi_invariant };

std::string to_string(DegreeCase c);

struct DegreePrediction {
  Shape shape;
  BlockSeq normalized_seq;
  int predicted_degree = 0;
  DegreeCase tag = DegreeCase::generic;
};

/// Nilpotency degree of n(C): k-1 generically, 1 for the all-ones shape,
/// k-2 for odd-symmetric shapes with d_1 = d_k = 1.
DegreePrediction predict_degree_canonical(const Shape& shape, const Field& field);

/// Degree of n(S) for arbitrary admissible S: normalizes S to T, then k-1
/// unless all-ones (1) or odd-symmetric with d_1 = d_k = 1 and T
/// phi-invariant (k-2). Char 0 only.
DegreePrediction predict_degree(const BlockSeq& seq);

/// 0, 1 or 2 for the canonical r_{1,k}.
int predict_r1k(const Shape& shape);

/// Moebius function.
int mobius(long long n);

/// Dimension (1/m) sum_{s|m} mu(s) g^{m/s} of the degree-m component of the
/// free Lie algebra on g generators.
long long witt_dim(int g, int m);

struct FreeProfile {
  int rho_gen = 0;  // generator count, max{d_i + d_{i+1} - 1}
  int steps = 0;    // N = computed nilpotency degree
  std::vector<long long> witt_dims;      // degrees 1..N
  std::vector<int> quotient_dims;        // computed lcs quotients, degrees 1..N
  bool free_verdict = false;
  std::optional<int> failing_degree;     // first m with quotient != Witt
  bool predicted_free = false;           // from the classification list
  std::optional<std::pair<int, int>> predicted_profile;  // (rho, N) when predicted free
};

/// Compares the computed lower-central-series quotients of n(S) with the
/// Witt dimensions, and with the classification list's verdict. Char 0 only.
FreeProfile free_check(const BlockSeq& seq);

/// The classification list: (rho, N) when the shape (with the stated
/// phi-invariance of the normalized T) yields a free nilpotent n(S).
std::optional<std::pair<int, int>> predicted_free_profile(const Shape& shape,
                                                          bool t_phi_invariant);

/// free_check on an already computed report (avoids recomputing the closure).
FreeProfile free_profile_from_report(const NilReport& report, bool t_phi_invariant);

/// Odd-symmetric shape with d_1 = d_k = 1 and phi-invariant sequence.
bool is_extreme_type(const BlockSeq& seq);

}  // namespace nilrad
