#include "nilrad/nilradical.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "nilrad/rng.hpp"

namespace nilrad {

std::vector<Matrix> nil_generators(const BlockSeq& seq) {
  const Shape& sh = seq.shape();
  const Field& f = seq.field();
  int rho = 0;
  for (int b = 0; b + 1 < sh.k(); ++b) rho = std::max(rho, sh.size(b) + sh.size(b + 1) - 2);
  const Matrix d0 = build_D(sh, Scalar::zero(f), Scalar::zero(f));
  std::vector<Matrix> gens;
  gens.push_back(build_E(seq));
  for (int l = 1; l <= rho; ++l) gens.push_back(bracket(d0, gens.back()));
  return gens;
}

MatrixSubspace lie_closure(const std::vector<Matrix>& generators) {
  if (generators.empty()) throw DimensionError("lie_closure needs at least one generator");
  const Field f = generators.front().field();
  const std::size_t d = generators.front().rows();
  MatrixSubspace sp(f, d);
  std::vector<Matrix> work;
  for (const Matrix& g : generators)
    if (sp.insert(g)) work.push_back(g);
  for (std::size_t qi = 0; qi < work.size(); ++qi) {
    const Matrix b = work[qi];
    for (const Matrix& g : generators) {
      Matrix w = bracket(g, b);
      if (w.is_zero()) continue;
      if (sp.insert(w)) work.push_back(std::move(w));
    }
  }
  return sp;
}

std::vector<MatrixSubspace> lower_central_series(const MatrixSubspace& basis,
                                                 const std::vector<Matrix>& generators,
                                                 bool verify_closed) {
  const Field f = basis.field();
  const std::size_t d = basis.matrix_dim();
  std::vector<Matrix> rows;
  for (std::size_t r = 0; r < basis.dim(); ++r) rows.push_back(basis.basis_matrix(r));
  if (verify_closed) {
    for (const Matrix& g : generators)
      for (const Matrix& b : rows)
        if (!basis.contains(bracket(g, b)))
          throw ClosureError("basis is not closed under bracketing with the generators");
  }
  std::vector<MatrixSubspace> series{basis};
  std::vector<Matrix> cur = rows;
  while (series.back().dim() > 0) {
    MatrixSubspace next(f, d);
    std::vector<Matrix> next_rows;
    for (const Matrix& v : cur)
      for (const Matrix& g : generators) {
        Matrix w = bracket(v, g);
        if (w.is_zero()) continue;
        next.insert(w);
      }
    for (std::size_t r = 0; r < next.dim(); ++r) next_rows.push_back(next.basis_matrix(r));
    if (next.dim() >= series.back().dim() && next.dim() > 0)
      throw InternalError("lower central series failed to decrease");
    series.push_back(std::move(next));
    cur = std::move(next_rows);
  }
  return series;
}

NilReport generate_nilradical(const BlockSeq& seq) {
  const Shape& sh = seq.shape();
  const Field& f = seq.field();
  const std::size_t d = static_cast<std::size_t>(sh.total());

  NilReport rep{sh, seq, f, {}, 0, 0, MatrixSubspace(f, d), {}, 0, {}, false, {}, 0};
  rep.generators = nil_generators(seq);
  rep.rho = static_cast<int>(rep.generators.size()) - 1;

  MatrixSubspace indep(f, d);
  for (const Matrix& g : rep.generators)
    if (indep.insert(g)) ++rep.independent_generators;

  rep.basis = lie_closure(rep.generators);

  const auto series = lower_central_series(rep.basis, rep.generators, /*verify_closed=*/false);
  for (const MatrixSubspace& s : series) rep.lcs_dims.push_back(static_cast<int>(s.dim()));
  rep.degree = static_cast<int>(series.size()) - 1;

  // Diagonal-degree structure: homogeneous dimensions when every echelon row
  // sits on a single offset, filtration quotient dimensions otherwise.
  rep.graded_basis = true;
  std::vector<int> row_offsets;
  for (std::size_t r = 0; r < rep.basis.dim(); ++r) {
    const Matrix b = rep.basis.basis_matrix(r);
    const int lead = ddeg(b);
    row_offsets.push_back(lead);
    if (diag_component(b, lead) != b) rep.graded_basis = false;
  }
  if (rep.graded_basis) {
    for (int t : row_offsets) ++rep.graded_dims[t];
  } else {
    for (std::size_t r = 0; r < rep.basis.dim(); ++r) ++rep.graded_dims[rep.basis.pivot_offset(r)];
  }

  // Block-degree grading holds for every S; verify by projecting.
  std::size_t total = 0;
  for (int b = 1; b < sh.k(); ++b) {
    MatrixSubspace comp(f, d);
    for (std::size_t r = 0; r < rep.basis.dim(); ++r) {
      const Matrix pr = block_component(sh, rep.basis.basis_matrix(r), b);
      if (!pr.is_zero()) comp.insert(pr);
    }
    if (comp.dim() > 0) rep.block_graded_dims[b] = static_cast<int>(comp.dim());
    total += comp.dim();
  }
  if (total != rep.basis.dim())
    throw InternalError("block-degree components do not sum to the nilradical dimension");

  rep.max_scalar_bits = rep.basis.max_bits();
  for (const MatrixSubspace& s : series)
    rep.max_scalar_bits = std::max(rep.max_scalar_bits, s.max_bits());
  for (const Matrix& g : rep.generators)
    rep.max_scalar_bits = std::max(rep.max_scalar_bits, g.max_bit_size());
  return rep;
}

MatrixSubspace derived_algebra(const BlockSeq& seq, const Scalar& alpha, const Scalar& lambda) {
  const Shape& sh = seq.shape();
  const Field& f = seq.field();
  const std::size_t d = static_cast<std::size_t>(sh.total());
  std::vector<Matrix> hbasis{build_D(sh, alpha, lambda)};
  const NilReport rep = generate_nilradical(seq);
  for (std::size_t r = 0; r < rep.basis.dim(); ++r) hbasis.push_back(rep.basis.basis_matrix(r));
  MatrixSubspace out(f, d);
  for (std::size_t i = 0; i < hbasis.size(); ++i)
    for (std::size_t j = i + 1; j < hbasis.size(); ++j) {
      Matrix w = bracket(hbasis[i], hbasis[j]);
      if (!w.is_zero()) out.insert(w);
    }
  return out;
}

int RankTable::at(int i, int j) const {
  const auto it = entries.find({i, j});
  if (it == entries.end()) throw DimensionError("rank table lookup out of range");
  return it->second;
}

namespace {

// Smallest support of a nonzero vector in the span of `rows` (r x w, echelon
// not required). Returns 0 when the span is zero; otherwise also yields a
// combination of the payload matrices realizing that support size.
struct MinWeight {
  int weight = 0;
  std::optional<Matrix> witness;
};

std::optional<std::vector<Scalar>> kernel_vector(const Matrix& a) {
  // Nonzero x with a x = 0, free variables fixed to {1, 0, ...}.
  const std::size_t m = a.rows(), n = a.cols();
  const Field f = a.field();
  std::vector<std::vector<Scalar>> w(m, std::vector<Scalar>(n, Scalar::zero(f)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i][j] = a.at(i, j);
  std::vector<long> pivot_of_col(n, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && w[piv][c].is_zero()) ++piv;
    if (piv == m) continue;
    std::swap(w[piv], w[r]);
    const Scalar inv = w[r][c].inverse();
    for (std::size_t j = c; j < n; ++j) w[r][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || w[i][c].is_zero()) continue;
      const Scalar fct = w[i][c];
      for (std::size_t j = c; j < n; ++j) w[i][j] -= fct * w[r][j];
    }
    pivot_of_col[c] = static_cast<long>(r);
    ++r;
  }
  long free_col = -1;
  for (std::size_t c = 0; c < n; ++c)
    if (pivot_of_col[c] < 0) {
      free_col = static_cast<long>(c);
      break;
    }
  if (free_col < 0) return std::nullopt;
  std::vector<Scalar> x(n, Scalar::zero(f));
  x[static_cast<std::size_t>(free_col)] = Scalar::one(f);
  for (std::size_t c = 0; c < n; ++c) {
    if (pivot_of_col[c] < 0) continue;
    x[c] = -w[static_cast<std::size_t>(pivot_of_col[c])][static_cast<std::size_t>(free_col)];
  }
  return x;
}

MinWeight min_support_weight(const Field& f, const std::vector<std::vector<Scalar>>& raw_rows,
                             const std::vector<Matrix>& payloads) {
  // Echelonize (code row, payload matrix) pairs together so witnesses can be
  // reconstructed from code-space coefficients.
  const std::size_t w = raw_rows.empty() ? 0 : raw_rows.front().size();
  std::vector<std::vector<Scalar>> rows;
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < raw_rows.size(); ++i) {
    std::vector<Scalar> v = raw_rows[i];
    Matrix p = payloads[i];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::size_t lead = 0;
      while (lead < w && rows[r][lead].is_zero()) ++lead;
      if (lead < w && !v[lead].is_zero()) {
        const Scalar c = v[lead];
        for (std::size_t j = 0; j < w; ++j) v[j] -= c * rows[r][j];
        p = p - mats[r].scaled(c);
      }
    }
    bool zero = true;
    for (const Scalar& s : v)
      if (!s.is_zero()) {
        zero = false;
        break;
      }
    if (zero) continue;
    std::size_t lead = 0;
    while (v[lead].is_zero()) ++lead;
    const Scalar inv = v[lead].inverse();
    for (std::size_t j = 0; j < w; ++j)
      if (!v[j].is_zero()) v[j] *= inv;
    rows.push_back(std::move(v));
    mats.push_back(p.scaled(inv));
  }
  MinWeight out;
  const std::size_t r = rows.size();
  if (r == 0) return out;

  for (std::size_t u = 1; u <= w; ++u) {
    std::vector<std::size_t> support(u);
    for (std::size_t i = 0; i < u; ++i) support[i] = i;
    while (true) {
      // Columns outside the candidate support.
      std::vector<std::size_t> outside;
      std::size_t si = 0;
      for (std::size_t c = 0; c < w; ++c) {
        if (si < u && support[si] == c) {
          ++si;
          continue;
        }
        outside.push_back(c);
      }
      Matrix m_out(f, outside.size(), r);
      for (std::size_t i = 0; i < outside.size(); ++i)
        for (std::size_t j = 0; j < r; ++j) m_out.at(i, j) = rows[j][outside[i]];
      if (rank(m_out) < r) {
        const auto x = kernel_vector(m_out);
        if (!x) throw InternalError("rank deficit without kernel vector");
        Matrix wit = Matrix::zero(f, payloads.front().rows(), payloads.front().cols());
        for (std::size_t j = 0; j < r; ++j)
          if (!(*x)[j].is_zero()) wit = wit + mats[j].scaled((*x)[j]);
        out.weight = static_cast<int>(u);
        out.witness = std::move(wit);
        return out;
      }
      // Next u-subset of {0..w-1}.
      long i = static_cast<long>(u) - 1;
      while (i >= 0 && support[static_cast<std::size_t>(i)] ==
                           w - u + static_cast<std::size_t>(i))
        --i;
      if (i < 0) break;
      ++support[static_cast<std::size_t>(i)];
      for (std::size_t j = static_cast<std::size_t>(i) + 1; j < u; ++j)
        support[j] = support[j - 1] + 1;
    }
  }
  throw InternalError("nonzero code without a minimum-weight vector");
}

}  // namespace

RankTable rank_table_from_report(const NilReport& report, int probe_samples,
                                 std::uint64_t probe_seed) {
  const Shape& sh = report.shape;
  const Field& f = report.field;
  if (!(report.seq == BlockSeq::canonical(sh, f)))
    throw UnsupportedError("rank_table is defined for the canonical sequence only");
  if (!report.graded_basis)
    throw InternalError("canonical nilradical basis is not diagonal-graded");

  // Bucket homogeneous basis elements by diagonal offset.
  std::map<int, std::vector<Matrix>> by_offset;
  for (std::size_t r = 0; r < report.basis.dim(); ++r) {
    Matrix b = report.basis.basis_matrix(r);
    by_offset[ddeg(b)].push_back(std::move(b));
  }

  RankTable table{sh, {}, {}, false};
  for (int i = 0; i < sh.k(); ++i)
    for (int j = i + 1; j < sh.k(); ++j) {
      int best = 0;
      std::optional<Matrix> best_wit;
      for (const auto& [t, mats] : by_offset) {
        const int delta = t - (sh.offset(j) - sh.offset(i));
        const int a_lo = std::max(0, -delta);
        const int a_hi = std::min(sh.size(i) - 1, sh.size(j) - 1 - delta);
        if (a_lo > a_hi) continue;
        const std::size_t w = static_cast<std::size_t>(a_hi - a_lo + 1);
        std::vector<std::vector<Scalar>> raws;
        std::vector<Matrix> payloads;
        for (const Matrix& m : mats) {
          std::vector<Scalar> v;
          v.reserve(w);
          bool nonzero = false;
          for (int a = a_lo; a <= a_hi; ++a) {
            const Scalar& s = m.at(static_cast<std::size_t>(sh.offset(i) + a),
                                   static_cast<std::size_t>(sh.offset(j) + a + delta));
            if (!s.is_zero()) nonzero = true;
            v.push_back(s);
          }
          if (nonzero) {
            raws.push_back(std::move(v));
            payloads.push_back(m);
          }
        }
        if (raws.empty()) continue;
        const MinWeight mw = min_support_weight(f, raws, payloads);
        if (mw.weight > 0 && (best == 0 || mw.weight < best)) {
          best = mw.weight;
          best_wit = mw.witness;
        }
      }
      table.entries[{i, j}] = best;
      if (best > 0 && best_wit) table.witnesses.emplace(std::make_pair(i, j), *best_wit);
    }

  if (probe_samples > 0 && report.basis.dim() > 0) {
    DetRng rng(DetRng::derive_key(probe_seed, {"rank_probe", sh.key(), f.name()}));
    for (int s = 0; s < probe_samples; ++s) {
      Matrix x = Matrix::zero(f, static_cast<std::size_t>(sh.total()),
                              static_cast<std::size_t>(sh.total()));
      for (std::size_t r = 0; r < report.basis.dim(); ++r) {
        const long long c = rng.int_in(-3, 3);
        if (c == 0) continue;
        x = x + report.basis.basis_matrix(r).scaled(Scalar::from_int(f, c));
      }
      for (auto& [ij, val] : table.entries) {
        const Matrix p = block_project(sh, x, ij.first, ij.second);
        if (p.is_zero()) continue;
        const int rk = static_cast<int>(rank(p));
        if (val == 0 || rk < val) table.probe_discrepancy = true;
      }
    }
  }
  return table;
}

RankTable rank_table(const Shape& shape, const Field& field, int probe_samples,
                     std::uint64_t probe_seed) {
  const NilReport rep = generate_nilradical(BlockSeq::canonical(shape, field));
  return rank_table_from_report(rep, probe_samples, probe_seed);
}

}  // namespace nilrad
