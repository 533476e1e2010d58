#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nilrad/blockstruct.hpp"

namespace nilrad {

inline constexpr const char* kToolVersion = "0.1.0";

/// Bounds and sampling policy for the theorem-verification sweep. Defaults
/// keep the closure cost at desk scale (ambient <= 196).
struct SweepConfig {
  int k_min = 2;
  int k_max = 6;
  int d_max = 4;
  int dim_cap = 14;
  std::string field = "Q";
  std::uint64_t seed = 1;
  int samples = 20;
  int entry_bound = 3;
  /// Subset of {"canonical", "general", "normalize"}; empty means all.
  std::vector<std::string> checks;
  int threads = 0;  // 0 = hardware concurrency
  /// |d| bound for the sampled general-S and normalization checks, which run
  /// closures on random (denser) sequences.
  int sample_dim_cap = 9;

  std::string to_json() const;
  static SweepConfig from_json(const std::string& text);
};

struct RunManifest {
  std::string payload;  // deterministic: identical config => identical bytes
  double wall_ms = 0;
  int mismatches = 0;
  int flagged = 0;  // char-p findings (expected theorem failures), not errors

  std::string full_json() const;
};

/// All shapes with k in [k_min, k_max], 1 <= d_i <= d_max, |d| <= dim_cap,
/// ordered by k then lexicographically. This order is the manifest order.
std::vector<Shape> shapes_in_bounds(int k_min, int k_max, int d_max, int dim_cap);

/// Computed-vs-predicted comparisons for the canonical degree theorem, the
/// r_{1,k} trichotomy, the free classification, the general-S dichotomy and
/// normalization uniqueness. Every mismatch is listed in the manifest.
RunManifest run_verify(const SweepConfig& cfg);

struct CharpConfig {
  std::vector<std::uint64_t> primes;
  int k_min = 2;
  int k_max = 4;
  int d_max = 3;
  int dim_cap = 20;
  std::string pattern = "constant_p";  // or "grid"
  int threads = 0;

  std::string to_json() const;
};

/// Degree of n(C) over F_p across the requested shapes, flagging departures
/// from the characteristic-0 prediction as findings.
RunManifest run_charp(const CharpConfig& cfg);

/// FNV-1a over the canonical config serialization.
std::string config_hash_hex(const std::string& canonical_json);

}  // namespace nilrad
