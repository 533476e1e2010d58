// Command-line driver: single-instance nilradical computations, theorem
// verification sweeps, normalization, classification tables and prime-
// characteristic exploration.
//
// Exit codes: 0 success, 1 verification mismatch, 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "nilrad/nilradical.hpp"
#include "nilrad/reps.hpp"
#include "nilrad/serialize.hpp"
#include "nilrad/sweep.hpp"
#include "nilrad/theory.hpp"

namespace {

using namespace nilrad;

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      const int v = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("cannot parse integer list entry '" + item + "'");
    }
  }
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot open output file: " + out_path);
  out << text << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct DegreeArgs {
  std::string d_csv, seq_path, field = "Q", out;
  bool canonical = false;
  bool basis = false;
};

int cmd_degree(const DegreeArgs& a) {
  BlockSeq seq = [&]() {
    if (!a.seq_path.empty()) {
      BlockSeq s = blockseq_from_file(a.seq_path);
      if (!a.d_csv.empty() && Shape(parse_int_list(a.d_csv)) != s.shape())
        throw InputError("--d disagrees with the sequence file's shape");
      return s;
    }
    if (!a.canonical)
      throw InputError("degree needs --canonical or --seq <file.json>");
    if (a.d_csv.empty()) throw InputError("degree needs --d when --canonical is given");
    return BlockSeq::canonical(Shape(parse_int_list(a.d_csv)), Field::parse(a.field));
  }();
  if (!a.seq_path.empty() && Field::parse(a.field) != seq.field() && a.field != "Q")
    throw InputError("--field disagrees with the sequence file's field");
  emit(nilreport_to_json(generate_nilradical(seq), a.basis), a.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic engine for nilradicals of block solvable Lie algebras"};
  app.require_subcommand(1);

  DegreeArgs deg;
  CLI::App* degree = app.add_subcommand("degree", "compute n(S) for one instance");
  degree->add_option("--d", deg.d_csv, "block sizes, e.g. 1,2,1");
  degree->add_flag("--canonical", deg.canonical, "use the canonical sequence");
  degree->add_option("--seq", deg.seq_path, "block sequence JSON file");
  degree->add_option("--field", deg.field, "Q (default) or F<p>");
  degree->add_flag("--basis", deg.basis, "include the echelon basis in the report");
  degree->add_option("--out", deg.out, "write JSON here instead of stdout");

  std::string v_config, v_field = "Q", v_out, v_checks;
  SweepConfig vcfg;
  CLI::App* verify = app.add_subcommand("verify", "computed-vs-predicted theorem sweep");
  verify->add_option("--config", v_config, "sweep config JSON file");
  verify->add_option("--k-min", vcfg.k_min);
  verify->add_option("--k-max", vcfg.k_max);
  verify->add_option("--d-max", vcfg.d_max);
  verify->add_option("--dim-cap", vcfg.dim_cap);
  verify->add_option("--field", v_field, "Q only");
  verify->add_option("--seed", vcfg.seed);
  verify->add_option("--samples", vcfg.samples, "samples per shape for the general-S check");
  verify->add_option("--threads", vcfg.threads);
  verify->add_option("--checks", v_checks, "subset of canonical,general,normalize");
  verify->add_option("--out", v_out, "write the manifest here");

  std::string n_seq, n_out;
  CLI::App* normalize = app.add_subcommand("normalize", "normalize a block sequence");
  normalize->add_option("--seq", n_seq, "block sequence JSON file")->required();
  normalize->add_option("--out", n_out);

  int c_n = 0, c_dim = 0, c_ell = -1;
  std::string c_lambda = "1", c_format = "json", c_out;
  CLI::App* classify = app.add_subcommand("classify", "enumerate classification shapes");
  classify->add_option("--n", c_n, "generator space dimension")->required();
  classify->add_option("--dim", c_dim, "total dimension |d|")->required();
  classify->add_option("--ell", c_ell, "nilpotency step (omit for the free-algebra mode)");
  classify->add_option("--lambda", c_lambda, "must be nonzero");
  classify->add_option("--format", c_format, "json or csv");
  classify->add_option("--out", c_out);

  std::string p_csv, p_pattern = "constant_p", p_out;
  CharpConfig pcfg;
  CLI::App* charp = app.add_subcommand("charp", "degree of n(C) over F_p");
  charp->add_option("--p", p_csv, "comma list of primes")->required();
  charp->add_option("--k-min", pcfg.k_min);
  charp->add_option("--k-max", pcfg.k_max);
  charp->add_option("--d-max", pcfg.d_max);
  charp->add_option("--dim-cap", pcfg.dim_cap);
  charp->add_option("--pattern", p_pattern, "constant_p (shapes (p,...,p)) or grid");
  charp->add_option("--threads", pcfg.threads);
  charp->add_option("--out", p_out);

  try {
    app.parse(argc, argv);

    if (degree->parsed()) return cmd_degree(deg);

    if (verify->parsed()) {
      SweepConfig cfg = vcfg;
      if (!v_config.empty()) cfg = SweepConfig::from_json(read_file(v_config));
      if (!v_field.empty()) cfg.field = v_field;
      if (!v_checks.empty()) {
        cfg.checks.clear();
        std::stringstream ss(v_checks);
        std::string item;
        while (std::getline(ss, item, ',')) cfg.checks.push_back(item);
      }
      const RunManifest m = run_verify(cfg);
      emit(m.full_json(), v_out);
      std::cerr << "verify: " << m.mismatches << " mismatches, " << m.wall_ms << " ms\n";
      return m.mismatches == 0 ? 0 : 1;
    }

    if (normalize->parsed()) {
      const NormalizeResult r = normalize_seq(blockseq_from_file(n_seq));
      emit(normalize_result_to_json(r), n_out);
      return 0;
    }

    if (classify->parsed()) {
      const Scalar lambda = Scalar::parse(Field::rationals(), c_lambda);
      if (lambda.is_zero())
        throw InputError("classification requires lambda != 0 (the lambda = 0 case is open)");
      const auto recs = c_ell < 0 ? enumerate_shapes(c_n, c_dim, EnumMode::free_alg)
                                  : enumerate_shapes(c_n, c_dim, EnumMode::ell_step, c_ell);
      if (c_format == "csv")
        emit(class_records_to_csv(recs), c_out);
      else if (c_format == "json")
        emit(class_records_to_json(recs), c_out);
      else
        throw InputError("--format must be json or csv");
      return 0;
    }

    if (charp->parsed()) {
      pcfg.pattern = p_pattern;
      for (int p : parse_int_list(p_csv)) {
        if (p <= 0) throw InputError("primes must be positive");
        pcfg.primes.push_back(static_cast<std::uint64_t>(p));
      }
      const RunManifest m = run_charp(pcfg);
      emit(m.full_json(), p_out);
      std::cerr << "charp: " << m.flagged << " instances depart from the char-0 degree\n";
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
