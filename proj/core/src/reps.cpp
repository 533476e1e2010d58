#include "nilrad/reps.hpp"

#include <algorithm>

#include "nilrad/nilradical.hpp"

namespace nilrad {

RepSpec build_rep(int n, const Scalar& lambda, const Scalar& alpha, const BlockSeq& seq) {
  if (n < 1) throw InputError("build_rep needs n >= 1");
  const Shape& sh = seq.shape();
  if (lambda.field() != seq.field() || alpha.field() != seq.field())
    throw DimensionError("scalar/sequence field mismatch");
  int max_adj = 0;
  for (int b = 0; b + 1 < sh.k(); ++b) max_adj = std::max(max_adj, sh.size(b) + sh.size(b + 1));
  if (max_adj > n + 1)
    throw AdmissibilityError("shape " + sh.key() + " has max{d_i+d_{i+1}} = " +
                             std::to_string(max_adj) + " > n+1 = " + std::to_string(n + 1));

  RepSpec rep{n, lambda, alpha, sh, seq, build_D(sh, alpha, lambda), {}, max_adj == n + 1};
  rep.v_images.push_back(build_E(seq));
  for (int j = 1; j < n; ++j) {
    const Matrix& prev = rep.v_images.back();
    rep.v_images.push_back(bracket(rep.x_image, prev) - prev.scaled(lambda));
  }
  // (ad R(x) - lambda)^n R(v_0) must vanish; this is the step-n relation.
  const Matrix& last = rep.v_images.back();
  const Matrix step_n = bracket(rep.x_image, last) - last.scaled(lambda);
  if (!step_n.is_zero())
    throw InternalError("step-n vanishing failed for shape " + sh.key());
  return rep;
}

bool verify_uniserial(const RepSpec& rep) {
  const Matrix& x = rep.x_image;
  const Matrix& v0 = rep.v_images.front();
  for (std::size_t i = 0; i + 1 < x.rows(); ++i)
    if (x.at(i, i + 1).is_zero() && v0.at(i, i + 1).is_zero()) return false;
  return true;
}

int quotient_level(const RepSpec& rep) {
  if (rep.lambda.is_zero())
    throw UnsupportedError("quotient_level requires lambda != 0");
  return generate_nilradical(rep.seq).degree;
}

namespace {

void compositions(int remaining, int n, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    if (cur.size() >= 2) {
      int max_adj = 0;
      for (std::size_t i = 0; i + 1 < cur.size(); ++i)
        max_adj = std::max(max_adj, cur[i] + cur[i + 1]);
      if (max_adj == n + 1) out.push_back(cur);
    }
    return;
  }
  for (int next = 1; next <= remaining; ++next) {
    if (!cur.empty() && cur.back() + next > n + 1) continue;
    cur.push_back(next);
    compositions(remaining - next, n, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<ClassRecord> enumerate_shapes(int n, int dim_total, EnumMode mode, int ell) {
  if (n < 2) throw InputError("enumerate_shapes needs n >= 2");
  if (dim_total < 2) throw InputError("enumerate_shapes needs dim_total >= 2");
  if (mode == EnumMode::ell_step && ell < 1) throw InputError("ell_step mode needs ell >= 1");

  std::vector<std::vector<int>> all;
  std::vector<int> cur;
  compositions(dim_total, n, cur, all);

  std::vector<ClassRecord> out;
  for (auto& d : all) {
    Shape sh(d);
    const int k = sh.k();
    if (mode == EnumMode::free_alg) {
      out.push_back(ClassRecord{k, sh, false, k - 1, "g_n_lambda"});
      continue;
    }
    const bool ends_one = sh.size(0) == 1 && sh.size(k - 1) == 1;
    if (ell % 2 == 0) {
      if (k == ell + 1) out.push_back(ClassRecord{k, sh, false, ell, "g_n_lambda_ell"});
    } else {
      if (k == ell + 1) out.push_back(ClassRecord{k, sh, false, ell, "g_n_lambda_ell"});
      if (k == ell + 2 && sh.is_odd_symmetric() && ends_one)
        out.push_back(ClassRecord{k, sh, true, ell, "g_n_lambda_ell"});
    }
  }
  return out;
}

bool distinct_normal_forms(const RepSpec& a, const RepSpec& b) {
  if (a.lambda.is_zero() || b.lambda.is_zero())
    throw UnsupportedError("normal-form comparison requires lambda != 0");
  const BlockSeq ta = is_normalized(a.seq) ? a.seq : normalize_seq(a.seq).normalized;
  const BlockSeq tb = is_normalized(b.seq) ? b.seq : normalize_seq(b.seq).normalized;
  return !(a.shape == b.shape && a.alpha == b.alpha && ta == tb);
}

}  // namespace nilrad
