// Acceptance suite: one line per criterion, exit 0 iff all pass.
//
//  1. canonical degree theorem across the bounded family
//  2. r_{1,k} trichotomy and rank-table invariants
//  3. general-S dichotomy on odd-symmetric shapes
//  4. weakly-normalized corner-vanishing equivalence
//  5. free-nilpotent classification
//  6. Witt dimensions
//  7. prime-characteristic fixtures
//  8. representation relation suite and enumerator count
//  9. normalization uniqueness and conjugation invariance

#include <algorithm>
#include <cstdio>
#include <json.hpp>
#include <set>
#include <string>
#include <vector>

#include "nilrad/nilradical.hpp"
#include "nilrad/reps.hpp"
#include "nilrad/serialize.hpp"
#include "nilrad/sweep.hpp"
#include "nilrad/theory.hpp"

using namespace nilrad;
using nlohmann::json;

namespace {

int failures = 0;
std::vector<std::pair<int, std::string>> lines;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  lines.emplace_back(id, std::string(pass ? "PASS" : "FAIL") + "  criterion " +
                             std::to_string(id) + ": " + name + " (" + detail + ")");
  if (!pass) ++failures;
}

Scalar sc(long long v, const Field& f) { return Scalar::from_int(f, v); }

void place(Matrix& m, const Shape& sh, int bi, int bj,
           std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long long v : row) {
      m.at(static_cast<std::size_t>(sh.offset(bi - 1)) + i,
           static_cast<std::size_t>(sh.offset(bj - 1)) + j) = Scalar::from_int(m.field(), v);
      ++j;
    }
    ++i;
  }
}

// Criteria 1, 2 and the family half of 5 share one canonical sweep.
void criteria_1_2_5() {
  SweepConfig cfg;
  cfg.checks = {"canonical"};
  const RunManifest m = run_verify(cfg);
  const json payload = json::parse(m.payload);

  int degree_bad = 0, table_bad = 0, free_bad = 0, n = 0;
  const Field f = Field::rationals();
  for (const auto& row : payload.at("rows")) {
    ++n;
    if (row.value("error", std::string{}) != "") {
      ++degree_bad;
      ++table_bad;
      ++free_bad;
      continue;
    }
    if (row.at("degree") != row.at("degree_predicted")) ++degree_bad;
    if (row.at("r1k") != row.at("r1k_predicted") || !row.at("rank_table_ok").get<bool>())
      ++table_bad;
    if (row.at("free") != row.at("free_predicted")) ++free_bad;
  }
  report(1, "canonical degree theorem over 2<=k<=6, d_i<=4, |d|<=14", degree_bad == 0,
         std::to_string(n) + " shapes, " + std::to_string(degree_bad) + " degree mismatches");
  report(2, "r_{1,k} trichotomy, r_{i,i+1} = 1, entries in {0,1,2}", table_bad == 0,
         std::to_string(n) + " rank tables, " + std::to_string(table_bad) + " mismatches");

  // Free classification, N >= 2 reading: the classification's 2-step
  // patterns for every d that keeps the shape inside the swept family
  // (entries <= 4 reaches d = 5 through (4,2,4)), plus the named 4- and
  // 5-block shapes.
  std::set<std::string> named;
  for (int d = 2; d <= 5; ++d) {
    for (auto dv : {std::vector<int>{d, 1, d}, {d - 1, 2, d - 1}, {d, 1, d - 1}, {d - 1, 1, d}}) {
      const Shape sh(dv);
      bool inside = sh.total() <= 14;
      for (int v : sh.sizes()) inside = inside && v <= 4;
      if (inside && !sh.all_ones()) named.insert(sh.key());
    }
  }
  named.insert("2,1,1,2");
  named.insert("2,1,2,1");
  named.insert("1,2,1,2");
  named.insert("1,2,1,2,1");
  named.insert("2,1,2,1,2");
  int named_bad = 0;
  for (const auto& row : payload.at("rows")) {
    const std::string key = row.at("shape");
    std::vector<int> dv;
    for (std::size_t p = 0; p < key.size();) {
      std::size_t q = key.find(',', p);
      if (q == std::string::npos) q = key.size();
      dv.push_back(std::stoi(key.substr(p, q - p)));
      p = q + 1;
    }
    const Shape sh(dv);
    const auto prof = predicted_free_profile(sh, sh.is_symmetric());
    const bool free2 = row.at("free").get<bool>() && prof && prof->second >= 2;
    if (free2 != (named.count(key) > 0)) ++named_bad;
  }

  // Profile spot checks from the criterion text.
  bool spots = true;
  const auto quot = [&](const BlockSeq& s) { return free_check(s).quotient_dims; };
  const BlockSeq t12121 =
      random_seq(Shape({1, 2, 1, 2, 1}), f, 202, 3, SeqConstraint::normalized_phi_invariant);
  spots = spots && quot(t12121) == std::vector<int>{2, 1, 2};
  spots = spots && quot(BlockSeq::canonical(Shape({2, 1, 2, 1, 2}), f)) ==
                       std::vector<int>{2, 1, 2, 3};
  for (auto dv : {std::vector<int>{2, 1, 1, 2}, {2, 1, 2, 1}, {1, 2, 1, 2}}) {
    const FreeProfile p = free_check(BlockSeq::canonical(Shape(dv), f));
    spots = spots && p.free_verdict && p.rho_gen == 2 && p.steps == 3;
  }
  for (int d = 2; d <= 4; ++d)
    for (auto dv : {std::vector<int>{d, 1, d}, {d - 1, 2, d - 1}, {d, 1, d - 1}, {d - 1, 1, d}}) {
      const Shape sh(dv);
      if (sh.all_ones()) continue;
      const FreeProfile p = free_check(BlockSeq::canonical(sh, f));
      spots = spots && p.free_verdict && p.rho_gen == d && p.steps == 2;
    }
  const FreeProfile p3113 = free_check(BlockSeq::canonical(Shape({3, 1, 1, 3}), f));
  const NilReport r3113 = generate_nilradical(BlockSeq::canonical(Shape({3, 1, 1, 3}), f));
  spots = spots && !p3113.free_verdict && r3113.lcs_dims[2] < 8;

  report(5, "free classification: named shapes free, all others not (N >= 2)",
         named_bad == 0 && spots,
         std::to_string(named_bad) + " membership mismatches, spot checks " +
             (spots ? "ok" : "failed"));
}

void criterion_3() {
  const Field f = Field::rationals();
  int bad = 0, n = 0;
  for (auto dv : {std::vector<int>{1, 3, 1}, {1, 2, 1, 2, 1}, {1, 4, 1, 4, 1}}) {
    const Shape sh(dv);
    const int k = sh.k();
    for (std::uint64_t s = 1; s <= 20; ++s) {
      const BlockSeq inv = random_seq(sh, f, s, 4, SeqConstraint::normalized_phi_invariant);
      ++n;
      if (generate_nilradical(inv).degree != k - 2) ++bad;
      BlockSeq gen = random_seq(sh, f, 1000 + s, 4, SeqConstraint::normalized);
      std::uint64_t bump = 0;
      while (is_phi_invariant(gen))
        gen = random_seq(sh, f, 5000 + 97 * s + (++bump), 4, SeqConstraint::normalized);
      ++n;
      if (generate_nilradical(gen).degree != k - 1) ++bad;
    }
  }
  for (auto dv : {std::vector<int>{1, 2, 2}, {2, 3, 1}, {3, 1, 2}, {1, 3, 2, 1}}) {
    const Shape sh(dv);
    for (std::uint64_t s = 1; s <= 5; ++s) {
      const BlockSeq raw = random_seq(sh, f, s, 4, SeqConstraint::none);
      ++n;
      if (generate_nilradical(raw).degree != sh.k() - 1) ++bad;
    }
  }
  report(3, "general-S dichotomy (phi-invariant k-2, generic k-1)", bad == 0,
         std::to_string(n) + " samples, " + std::to_string(bad) + " mismatches");
}

void criterion_4() {
  const Field f = Field::rationals();
  int bad = 0, n = 0;
  for (auto dv : {std::vector<int>{1, 3, 1}, {2, 1, 2}, {2, 3, 2}, {4, 1, 4}, {1, 2, 1, 2, 1},
                  {2, 1, 3, 1, 2}}) {
    const Shape sh(dv);
    const std::size_t d = static_cast<std::size_t>(sh.total());
    const auto corner_vanishes = [&](const BlockSeq& s) {
      const NilReport rep = generate_nilradical(s);
      for (std::size_t r = 0; r < rep.basis.dim(); ++r)
        if (!rep.basis.basis_matrix(r).at(0, d - 1).is_zero()) return false;
      return true;
    };
    for (std::uint64_t s = 1; s <= 4; ++s) {
      const BlockSeq inv = random_seq(sh, f, s, 4, SeqConstraint::normalized_phi_invariant);
      ++n;
      if (corner_vanishes(inv) != is_phi_invariant(inv) || !is_phi_invariant(inv)) ++bad;
      BlockSeq gen = random_seq(sh, f, 300 + s, 4, SeqConstraint::weakly_normalized);
      std::uint64_t bump = 0;
      while (is_phi_invariant(gen))
        gen = random_seq(sh, f, 900 + 31 * s + (++bump), 4, SeqConstraint::weakly_normalized);
      ++n;
      if (corner_vanishes(gen) != is_phi_invariant(gen) || is_phi_invariant(gen)) ++bad;
    }
  }
  report(4, "weakly-normalized equivalence: A_{1,d} = 0 iff phi-invariant", bad == 0,
         std::to_string(n) + " samples, " + std::to_string(bad) + " exceptions");
}

void criterion_6() {
  bool ok = witt_dim(2, 3) == 2 && witt_dim(3, 3) == 8 && witt_dim(2, 4) == 3;
  for (int g = 1; g <= 6; ++g) ok = ok && witt_dim(g, 1) == g;
  report(6, "Witt values (2,3)->2, (3,3)->8, (2,4)->3, (g,1)->g", ok, "exact");
}

void criterion_7() {
  int bad = 0, n = 0;
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    const Field f = Field::prime(p);
    for (int k = 2; k <= 5; ++k) {
      const Shape sh(std::vector<int>(static_cast<std::size_t>(k), static_cast<int>(p)));
      ++n;
      if (generate_nilradical(BlockSeq::canonical(sh, f)).degree != 1) ++bad;
    }
  }

  const Field f2 = Field::prime(2);
  const Shape sh({2, 3, 2, 3, 2});
  const NilReport rep = generate_nilradical(BlockSeq::canonical(sh, f2));
  bool fixture = rep.basis.dim() == 8 && rep.degree == 3;
  const std::size_t d = static_cast<std::size_t>(sh.total());
  std::vector<Matrix> basis_fixture(8, Matrix::zero(f2, d, d));
  place(basis_fixture[0], sh, 1, 2, {{0, 0, 0}, {1, 0, 0}});
  place(basis_fixture[0], sh, 2, 3, {{0, 0}, {0, 0}, {1, 0}});
  place(basis_fixture[0], sh, 3, 4, {{0, 0, 0}, {1, 0, 0}});
  place(basis_fixture[0], sh, 4, 5, {{0, 0}, {0, 0}, {1, 0}});
  place(basis_fixture[1], sh, 1, 2, {{1, 0, 0}, {0, 1, 0}});
  place(basis_fixture[1], sh, 2, 3, {{0, 0}, {1, 0}, {0, 1}});
  place(basis_fixture[1], sh, 3, 4, {{1, 0, 0}, {0, 1, 0}});
  place(basis_fixture[1], sh, 4, 5, {{0, 0}, {1, 0}, {0, 1}});
  place(basis_fixture[2], sh, 1, 2, {{0, 0, 0}, {0, 0, 1}});
  place(basis_fixture[2], sh, 2, 3, {{1, 0}, {0, 0}, {0, 0}});
  place(basis_fixture[2], sh, 3, 4, {{0, 0, 0}, {0, 0, 1}});
  place(basis_fixture[2], sh, 4, 5, {{1, 0}, {0, 0}, {0, 0}});
  place(basis_fixture[3], sh, 1, 2, {{0, 0, 1}, {0, 0, 0}});
  place(basis_fixture[3], sh, 2, 3, {{0, 1}, {0, 0}, {0, 0}});
  place(basis_fixture[3], sh, 3, 4, {{0, 0, 1}, {0, 0, 0}});
  place(basis_fixture[3], sh, 4, 5, {{0, 1}, {0, 0}, {0, 0}});
  place(basis_fixture[4], sh, 1, 3, {{1, 0}, {0, 1}});
  place(basis_fixture[4], sh, 2, 4, {{1, 0, 0}, {0, 0, 0}, {0, 0, 1}});
  place(basis_fixture[4], sh, 3, 5, {{1, 0}, {0, 1}});
  place(basis_fixture[5], sh, 2, 4, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  place(basis_fixture[6], sh, 1, 4, {{0, 0, 0}, {0, 1, 0}});
  place(basis_fixture[6], sh, 2, 5, {{0, 0}, {1, 0}, {0, 0}});
  place(basis_fixture[7], sh, 1, 4, {{0, 1, 0}, {0, 0, 1}});
  place(basis_fixture[7], sh, 2, 5, {{1, 0}, {0, 1}, {0, 0}});
  MatrixSubspace span(f2, d);
  for (const Matrix& m : basis_fixture) span.insert(m);
  fixture = fixture && span == rep.basis;

  report(7, "char-p fixtures: (p,...,p) abelian; (2,3,2,3,2)/F2 basis", bad == 0 && fixture,
         std::to_string(n) + " (p,...,p) shapes, " + std::to_string(bad) +
             " degree mismatches; fixture " + (fixture ? "matches" : "differs"));
}

void criterion_8() {
  const Field f = Field::rationals();
  const Scalar one = sc(1, f), zero = sc(0, f);
  int bad = 0, n = 0;
  for (int nn = 2; nn <= 4; ++nn) {
    for (int dim = 2; dim <= 9; ++dim) {
      for (const ClassRecord& rec : enumerate_shapes(nn, dim, EnumMode::free_alg)) {
        ++n;
        const BlockSeq s = random_seq(rec.shape, f, 808 + static_cast<std::uint64_t>(dim), 3,
                                      SeqConstraint::normalized);
        const RepSpec rep = build_rep(nn, one, zero, s);
        bool ok = verify_uniserial(rep);
        for (int j = 0; j + 1 < nn; ++j)
          ok = ok && bracket(rep.x_image, rep.v_images[static_cast<std::size_t>(j)]) ==
                         rep.v_images[static_cast<std::size_t>(j)] +
                             rep.v_images[static_cast<std::size_t>(j + 1)];
        ok = ok && bracket(rep.x_image, rep.v_images[static_cast<std::size_t>(nn - 1)]) ==
                       rep.v_images[static_cast<std::size_t>(nn - 1)];
        const Matrix& last = rep.v_images.back();
        ok = ok && (bracket(rep.x_image, last) - last).is_zero();  // step-n vanishing
        ok = ok && quotient_level(rep) == predict_degree(s).predicted_degree;
        if (!ok) ++bad;
      }
    }
  }
  const bool count_ok = enumerate_shapes(2, 4, EnumMode::free_alg).size() == 3;
  report(8, "representation relations, uniseriality, quotient level; n=2 dim=4 -> 3 shapes",
         bad == 0 && count_ok,
         std::to_string(n) + " reps, " + std::to_string(bad) + " failures; count " +
             (count_ok ? "ok" : "wrong"));
}

void criterion_9() {
  const Field f = Field::rationals();
  int bad = 0, n = 0;
  bool always_unique = true;
  for (auto dv : {std::vector<int>{1, 1}, {2, 2}, {1, 3, 1}, {2, 1, 2}, {1, 2, 1, 2}, {2, 3, 2},
                  {3, 1, 3}, {1, 2, 1, 2, 1}, {2, 2, 2}, {1, 4, 1}}) {
    const Shape sh(dv);
    for (std::uint64_t s = 1; s <= 10; ++s) {
      ++n;
      const BlockSeq raw = random_seq(sh, f, s, 3, SeqConstraint::none);
      const GroupElem p = random_group_elem(sh, f, 50 + s, 3);
      const BlockSeq conj = conjugate_seq(raw, p);
      const NormalizeResult a = normalize_seq(raw);
      const NormalizeResult b = normalize_seq(conj);
      always_unique = always_unique && a.unique && b.unique;
      if (blockseq_to_json(a.normalized) != blockseq_to_json(b.normalized)) {
        ++bad;
        continue;
      }
      if (generate_nilradical(raw).degree != generate_nilradical(conj).degree) ++bad;
    }
  }
  report(9, "normalization: byte-identical across G(d)-conjugation, degree invariant",
         bad == 0 && always_unique,
         std::to_string(n) + " triples, " + std::to_string(bad) + " mismatches, solves " +
             (always_unique ? "all unique" : "NOT all unique"));
}

}  // namespace

int main() {
  criteria_1_2_5();
  criterion_3();
  criterion_4();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  std::sort(lines.begin(), lines.end());
  for (const auto& [id, line] : lines) std::printf("%s\n", line.c_str());
  std::printf("%s\n", failures == 0 ? "ACCEPTANCE: all criteria pass"
                                    : "ACCEPTANCE: FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
