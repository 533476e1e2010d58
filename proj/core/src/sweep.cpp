#include "nilrad/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <thread>

#include "json_util.hpp"
#include "nilrad/nilradical.hpp"
#include "nilrad/rng.hpp"
#include "nilrad/serialize.hpp"
#include "nilrad/theory.hpp"

namespace nilrad {

using detail::json;

std::string config_hash_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[19];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string SweepConfig::to_json() const {
  json j;
  j["k_min"] = k_min;
  j["k_max"] = k_max;
  j["d_max"] = d_max;
  j["dim_cap"] = dim_cap;
  j["field"] = field;
  j["seed"] = seed;
  j["samples"] = samples;
  j["entry_bound"] = entry_bound;
  j["checks"] = checks;
  j["sample_dim_cap"] = sample_dim_cap;
  return j.dump();
}

SweepConfig SweepConfig::from_json(const std::string& text) {
  const json j = detail::parse(text, "sweep config");
  SweepConfig c;
  if (j.contains("k_min")) c.k_min = j.at("k_min").get<int>();
  if (j.contains("k_max")) c.k_max = j.at("k_max").get<int>();
  if (j.contains("d_max")) c.d_max = j.at("d_max").get<int>();
  if (j.contains("dim_cap")) c.dim_cap = j.at("dim_cap").get<int>();
  if (j.contains("field")) c.field = j.at("field").get<std::string>();
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("samples")) c.samples = j.at("samples").get<int>();
  if (j.contains("entry_bound")) c.entry_bound = j.at("entry_bound").get<int>();
  if (j.contains("checks")) c.checks = j.at("checks").get<std::vector<std::string>>();
  if (j.contains("sample_dim_cap")) c.sample_dim_cap = j.at("sample_dim_cap").get<int>();
  if (j.contains("threads")) c.threads = j.at("threads").get<int>();
  if (c.k_min < 2 || c.k_max < c.k_min || c.d_max < 1 || c.dim_cap < 2)
    throw InputError("sweep bounds out of range");
  return c;
}

std::string CharpConfig::to_json() const {
  json j;
  j["primes"] = primes;
  j["k_min"] = k_min;
  j["k_max"] = k_max;
  j["d_max"] = d_max;
  j["dim_cap"] = dim_cap;
  j["pattern"] = pattern;
  return j.dump();
}

std::string RunManifest::full_json() const {
  json j;
  j["payload"] = detail::parse(payload, "manifest payload");
  j["wall_ms"] = wall_ms;
  return j.dump(2);
}

std::vector<Shape> shapes_in_bounds(int k_min, int k_max, int d_max, int dim_cap) {
  std::vector<Shape> out;
  std::vector<int> cur;
  const std::function<void(int, int)> rec = [&](int k, int total) {
    if (static_cast<int>(cur.size()) == k) {
      out.emplace_back(cur);
      return;
    }
    for (int v = 1; v <= d_max; ++v) {
      if (total + v > dim_cap) break;
      cur.push_back(v);
      rec(k, total + v);
      cur.pop_back();
    }
  };
  for (int k = k_min; k <= k_max; ++k) rec(k, 0);
  return out;
}

namespace {

bool wants(const SweepConfig& cfg, const std::string& check) {
  if (cfg.checks.empty()) return true;
  for (const std::string& c : cfg.checks)
    if (c == check) return true;
  return false;
}

struct Task {
  std::string check;
  Shape shape;
  int sample = -1;
};

// Runs tasks over a bounded pool; results land in their task slot, so the
// manifest is independent of scheduling.
std::vector<json> run_pool(const std::vector<Task>& tasks, int threads,
                           const std::function<json(const Task&)>& body) {
  std::vector<json> rows(tasks.size());
  unsigned n = threads > 0 ? static_cast<unsigned>(threads)
                           : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, tasks.empty() ? 1 : static_cast<unsigned>(tasks.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        rows[i] = body(tasks[i]);
      } catch (const std::exception& e) {
        json r;
        r["check"] = tasks[i].check;
        r["shape"] = tasks[i].shape.key();
        r["ok"] = false;
        r["error"] = e.what();
        rows[i] = std::move(r);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return rows;
}

json canonical_row(const Shape& sh, const Field& field) {
  json r;
  r["check"] = "canonical";
  r["shape"] = sh.key();
  bool ok = true;

  const BlockSeq c = BlockSeq::canonical(sh, field);
  const NilReport rep = generate_nilradical(c);
  const DegreePrediction pred = predict_degree_canonical(sh, field);
  r["degree"] = rep.degree;
  r["degree_predicted"] = pred.predicted_degree;
  r["dim"] = static_cast<int>(rep.basis.dim());
  if (rep.degree != pred.predicted_degree) ok = false;

  const RankTable table = rank_table_from_report(rep);
  const int k = sh.k();
  const int r1k = table.at(0, k - 1);
  r["r1k"] = r1k;
  r["r1k_predicted"] = predict_r1k(sh);
  if (r1k != predict_r1k(sh)) ok = false;
  bool table_ok = !table.probe_discrepancy;
  for (const auto& [ij, v] : table.entries) {
    if (v < 0 || v > 2) table_ok = false;
    if (ij.second == ij.first + 1 && v != 1) table_ok = false;
  }
  // Corollary check: a fully vanishing super-diagonal with at least two
  // windows (l <= k-2) forces the all-ones shape. At l = k-1 the single
  // window is exactly the r_{1,k} = 0 dichotomy handled above.
  for (int l = 1; l + 1 < k; ++l) {
    bool all_zero = true;
    for (int i = 0; i + l < k; ++i)
      if (table.at(i, i + l) != 0) all_zero = false;
    if (all_zero && !sh.all_ones()) table_ok = false;
  }
  r["rank_table_ok"] = table_ok;
  if (!table_ok) ok = false;

  // Free classification: canonical T = C; C is phi-invariant iff the shape
  // is symmetric.
  const FreeProfile fp = free_profile_from_report(rep, sh.is_symmetric());
  r["free"] = fp.free_verdict;
  r["free_predicted"] = fp.predicted_free;
  if (fp.free_verdict != fp.predicted_free) ok = false;
  if (fp.free_verdict && fp.predicted_profile) {
    if (fp.rho_gen != fp.predicted_profile->first || fp.steps != fp.predicted_profile->second)
      ok = false;
  }

  r["ok"] = ok;
  return r;
}

json general_row(const Shape& sh, const Field& field, const SweepConfig& cfg, int sample) {
  json r;
  r["check"] = "general";
  r["shape"] = sh.key();
  r["sample"] = sample;

  // Thirds: phi-invariant normalized, generic normalized, raw admissible.
  SeqConstraint constraint = SeqConstraint::none;
  if (sh.is_symmetric() && sample % 3 == 0)
    constraint = SeqConstraint::normalized_phi_invariant;
  else if (sample % 3 != 2)
    constraint = SeqConstraint::normalized;
  const std::uint64_t seed = cfg.seed * 1000003u + static_cast<std::uint64_t>(sample);
  const BlockSeq s = random_seq(sh, field, seed, cfg.entry_bound, constraint);

  const DegreePrediction pred = predict_degree(s);
  const NilReport rep = generate_nilradical(s);
  r["constraint"] = to_string(constraint);
  r["degree"] = rep.degree;
  r["degree_predicted"] = pred.predicted_degree;
  r["case"] = to_string(pred.tag);
  r["ok"] = rep.degree == pred.predicted_degree;
  return r;
}

json normalize_row(const Shape& sh, const Field& field, const SweepConfig& cfg, int sample) {
  json r;
  r["check"] = "normalize";
  r["shape"] = sh.key();
  r["sample"] = sample;

  const std::uint64_t seed = cfg.seed * 7777777u + static_cast<std::uint64_t>(sample);
  const BlockSeq s = random_seq(sh, field, seed, cfg.entry_bound, SeqConstraint::none);
  const GroupElem p = random_group_elem(sh, field, seed + 1, cfg.entry_bound);
  const BlockSeq conj = conjugate_seq(s, p);

  const NormalizeResult n1 = normalize_seq(s);
  const NormalizeResult n2 = normalize_seq(conj);
  bool ok = blockseq_to_json(n1.normalized) == blockseq_to_json(n2.normalized);
  r["unique"] = n1.unique && n2.unique;
  r["normal_forms_equal"] = ok;

  const int deg_s = generate_nilradical(s).degree;
  const int deg_conj = generate_nilradical(conj).degree;
  r["degree"] = deg_s;
  if (deg_s != deg_conj) ok = false;

  r["ok"] = ok;
  return r;
}

}  // namespace

RunManifest run_verify(const SweepConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const Field field = Field::parse(cfg.field);
  if (!field.is_rational())
    throw InputError("verify sweeps the characteristic-0 theorems; use charp for F_p");

  const std::vector<Shape> shapes = shapes_in_bounds(cfg.k_min, cfg.k_max, cfg.d_max, cfg.dim_cap);

  std::vector<Task> tasks;
  if (wants(cfg, "canonical"))
    for (const Shape& sh : shapes) tasks.push_back({"canonical", sh, -1});
  if (wants(cfg, "general")) {
    for (const Shape& sh : shapes) {
      if (sh.total() > cfg.sample_dim_cap || sh.all_ones()) continue;
      const bool odd_sym = sh.is_odd_symmetric();
      const bool asym = !sh.is_symmetric() && sh.k() <= 4;
      if (!odd_sym && !asym) continue;
      // Keep the sampled family small: all odd-symmetric shapes, and a thin
      // slice of asymmetric ones.
      if (asym && (sh.total() > 7 || sh.k() > 3)) continue;
      for (int s = 0; s < cfg.samples; ++s) tasks.push_back({"general", sh, s});
    }
  }
  if (wants(cfg, "normalize")) {
    for (const Shape& sh : shapes) {
      if (sh.total() > std::min(cfg.sample_dim_cap, 7)) continue;
      const int per_shape = std::min(cfg.samples, 5);
      for (int s = 0; s < per_shape; ++s) tasks.push_back({"normalize", sh, s});
    }
  }

  const std::vector<json> rows = run_pool(tasks, cfg.threads, [&](const Task& t) -> json {
    if (t.check == "canonical") return canonical_row(t.shape, field);
    if (t.check == "general") return general_row(t.shape, field, cfg, t.sample);
    return normalize_row(t.shape, field, cfg, t.sample);
  });

  json payload;
  payload["version"] = kToolVersion;
  const std::string cfg_json = cfg.to_json();
  payload["config"] = detail::parse(cfg_json, "config");
  payload["config_hash"] = config_hash_hex(cfg_json);
  payload["field"] = field.name();
  payload["seed"] = cfg.seed;

  int mismatches = 0;
  json mismatch_rows = json::array();
  json jrows = json::array();
  for (const json& r : rows) {
    jrows.push_back(r);
    if (!r.value("ok", false)) {
      ++mismatches;
      mismatch_rows.push_back(r);
    }
  }
  payload["rows"] = std::move(jrows);
  payload["mismatches"] = std::move(mismatch_rows);
  payload["summary"] = json{{"instances", rows.size()}, {"mismatch_count", mismatches}};

  RunManifest m;
  m.payload = payload.dump();
  m.mismatches = mismatches;
  m.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                  .count();
  return m;
}

RunManifest run_charp(const CharpConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  if (cfg.primes.empty()) throw InputError("charp needs at least one prime");
  if (cfg.pattern != "constant_p" && cfg.pattern != "grid")
    throw InputError("charp pattern must be constant_p or grid");

  struct PTask {
    std::uint64_t p;
    Shape shape;
  };
  std::vector<PTask> tasks;
  for (std::uint64_t p : cfg.primes) {
    (void)Field::prime(p);  // validates primality up front
    if (cfg.pattern == "constant_p") {
      for (int k = cfg.k_min; k <= cfg.k_max; ++k)
        tasks.push_back({p, Shape(std::vector<int>(static_cast<std::size_t>(k),
                                                   static_cast<int>(p)))});
    } else {
      for (const Shape& sh : shapes_in_bounds(cfg.k_min, cfg.k_max, cfg.d_max, cfg.dim_cap))
        tasks.push_back({p, sh});
    }
  }

  std::vector<json> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  unsigned n = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                               : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, tasks.empty() ? 1 : static_cast<unsigned>(tasks.size()));
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const PTask& t = tasks[i];
      json r;
      r["p"] = t.p;
      r["shape"] = t.shape.key();
      try {
        const Field f = Field::prime(t.p);
        const NilReport rep = generate_nilradical(BlockSeq::canonical(t.shape, f));
        const int char0 = predict_degree_canonical(t.shape, f).predicted_degree;
        r["degree"] = rep.degree;
        r["dim"] = static_cast<int>(rep.basis.dim());
        r["generators"] = rep.independent_generators;
        r["char0_degree"] = char0;
        r["flagged"] = rep.degree != char0;
      } catch (const std::exception& e) {
        r["error"] = e.what();
        r["flagged"] = true;
      }
      rows[i] = std::move(r);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  json payload;
  payload["version"] = kToolVersion;
  const std::string cfg_json = cfg.to_json();
  payload["config"] = detail::parse(cfg_json, "config");
  payload["config_hash"] = config_hash_hex(cfg_json);
  int flagged = 0;
  json jrows = json::array();
  for (const json& r : rows) {
    jrows.push_back(r);
    if (r.value("flagged", false)) ++flagged;
  }
  payload["rows"] = std::move(jrows);
  payload["summary"] = json{{"instances", rows.size()}, {"flagged", flagged}};

  RunManifest m;
  m.payload = payload.dump();
  m.flagged = flagged;
  m.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                  .count();
  return m;
}

}  // namespace nilrad
