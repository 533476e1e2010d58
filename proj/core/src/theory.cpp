#include "nilrad/theory.hpp"

#include <algorithm>

namespace nilrad {

std::string to_string(DegreeCase c) {
  switch (c) {
    case DegreeCase::generic: return "generic";
    case DegreeCase::all_ones: return "all_ones";
    case DegreeCase::odd_symmetric_phi_invariant: return "odd_symmetric_phi_invariant";
  }
  return "?";
}

namespace {

DegreePrediction classify(const Shape& shape, BlockSeq normalized, bool t_phi_invariant) {
  DegreePrediction p{shape, std::move(normalized), 0, DegreeCase::generic};
  if (shape.all_ones()) {
    p.tag = DegreeCase::all_ones;
    p.predicted_degree = 1;
  } else if (shape.is_odd_symmetric() && shape.size(0) == 1 && shape.size(shape.k() - 1) == 1 &&
             t_phi_invariant) {
    p.tag = DegreeCase::odd_symmetric_phi_invariant;
    p.predicted_degree = shape.k() - 2;
  } else {
    p.predicted_degree = shape.k() - 1;
  }
  return p;
}

}  // namespace

DegreePrediction predict_degree_canonical(const Shape& shape, const Field& field) {
  // The canonical sequence on a symmetric shape is phi-invariant.
  return classify(shape, BlockSeq::canonical(shape, field), shape.is_symmetric());
}

DegreePrediction predict_degree(const BlockSeq& seq) {
  if (!seq.field().is_rational())
    throw UnsupportedError("predict_degree is proven for characteristic 0 only; use the char-p sweep");
  NormalizeResult nr = normalize_seq(seq);
  const bool phi = is_phi_invariant(nr.normalized);
  return classify(seq.shape(), std::move(nr.normalized), phi);
}

int predict_r1k(const Shape& shape) {
  const int k = shape.k();
  if (k == 2) return 1;  // r_{i,i+1} = 1 always
  const bool ends_one = shape.size(0) == 1 && shape.size(k - 1) == 1;
  if (shape.all_ones() || (shape.is_odd_symmetric() && ends_one)) return 0;
  if (shape.is_odd_symmetric() && shape.size(0) == shape.size(k - 1) && shape.size(0) > 1) return 2;
  return 1;
}

int mobius(long long n) {
  if (n <= 0) throw Error("mobius needs a positive argument");
  int primes = 0;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    ++primes;
  }
  if (n > 1) ++primes;
  return primes % 2 == 0 ? 1 : -1;
}

long long witt_dim(int g, int m) {
  if (g < 1 || m < 1) throw Error("witt_dim needs g >= 1, m >= 1");
  long long acc = 0;
  for (long long s = 1; s <= m; ++s) {
    if (m % s) continue;
    const int mu = mobius(s);
    if (mu == 0) continue;
    long long pw = 1;
    for (int e = 0; e < m / s; ++e) pw *= g;
    acc += mu * pw;
  }
  if (acc % m != 0) throw InternalError("Witt sum not divisible by the degree");
  return acc / m;
}

// Shapes (with the phi-invariance side condition on the normalized T) whose
// n(S) is free nilpotent, with its (rho, N).
std::optional<std::pair<int, int>> predicted_free_profile(const Shape& sh, bool t_phi_invariant) {
  const std::vector<int>& d = sh.sizes();
  const int k = sh.k();
  if (sh.all_ones()) return std::make_pair(1, 1);
  // k = 2: products of two block-(1,2) matrices vanish, so n(S) is abelian of
  // dimension d_1 + d_2 - 1 for every S: the free 1-step algebra.
  if (k == 2) return std::make_pair(d[0] + d[1] - 1, 1);
  if (k == 3 && d[0] == 1 && d[2] == 1 && d[1] >= 3 && d[1] % 2 == 1 && t_phi_invariant)
    return std::make_pair(d[1], 1);
  if (k == 3) {
    const int a = d[0], b = d[1], c = d[2];
    if (b == 1 && a == c && a >= 2) return std::make_pair(a, 2);
    if (b == 2 && a == c && a + 1 >= 2) return std::make_pair(a + 1, 2);
    if (b == 1 && a == c + 1 && a >= 2) return std::make_pair(a, 2);
    if (b == 1 && c == a + 1 && c >= 2) return std::make_pair(c, 2);
  }
  if (d == std::vector<int>{2, 1, 1, 2} || d == std::vector<int>{2, 1, 2, 1} ||
      d == std::vector<int>{1, 2, 1, 2})
    return std::make_pair(2, 3);
  if (d == std::vector<int>{1, 2, 1, 2, 1} && t_phi_invariant) return std::make_pair(2, 3);
  if (d == std::vector<int>{2, 1, 2, 1, 2}) return std::make_pair(2, 4);
  return std::nullopt;
}

FreeProfile free_profile_from_report(const NilReport& rep, bool t_phi_invariant) {
  const Shape& sh = rep.shape;
  FreeProfile out;
  int rho = 0;
  for (int b = 0; b + 1 < sh.k(); ++b) rho = std::max(rho, sh.size(b) + sh.size(b + 1) - 1);
  out.rho_gen = rho;
  out.steps = rep.degree;
  out.free_verdict = true;
  for (int m = 1; m <= rep.degree; ++m) {
    const long long wd = witt_dim(rho, m);
    const int q = rep.lcs_dims[static_cast<std::size_t>(m - 1)] -
                  rep.lcs_dims[static_cast<std::size_t>(m)];
    out.witt_dims.push_back(wd);
    out.quotient_dims.push_back(q);
    if (q != wd && !out.failing_degree) {
      out.free_verdict = false;
      out.failing_degree = m;
    }
  }
  const auto prof = predicted_free_profile(sh, t_phi_invariant);
  out.predicted_free = prof.has_value();
  out.predicted_profile = prof;
  return out;
}

FreeProfile free_check(const BlockSeq& seq) {
  if (!seq.field().is_rational())
    throw UnsupportedError("free_check is proven for characteristic 0 only; use the char-p sweep");
  const NormalizeResult nr = normalize_seq(seq);
  return free_profile_from_report(generate_nilradical(seq), is_phi_invariant(nr.normalized));
}

bool is_extreme_type(const BlockSeq& seq) {
  const Shape& sh = seq.shape();
  return sh.is_odd_symmetric() && sh.size(0) == 1 && sh.size(sh.k() - 1) == 1 &&
         is_phi_invariant(seq);
}

}  // namespace nilrad
