#include "nilrad/serialize.hpp"

#include <fstream>
#include <sstream>

#include "json_util.hpp"

namespace nilrad {

namespace detail {

json parse(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed JSON for " + what + ": " + e.what());
  }
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from(const Field& f, const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw InputError("matrix JSON must be an array of " + std::to_string(rows) + " rows");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != cols)
      throw InputError("matrix row " + std::to_string(i + 1) + " must have " +
                       std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!row[c].is_string()) throw InputError("matrix entries must be scalar strings");
      m.at(i, c) = Scalar::parse(f, row[c].get<std::string>());
    }
  }
  return m;
}

json shape_json(const Shape& s) {
  json a = json::array();
  for (int v : s.sizes()) a.push_back(v);
  return a;
}

Shape shape_from(const json& j) {
  if (!j.is_array() || j.size() < 2) throw InputError("shape must be an array of k >= 2 sizes");
  std::vector<int> d;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<int>() <= 0)
      throw InputError("shape entries must be positive integers");
    d.push_back(v.get<int>());
  }
  return Shape(d);
}

json blockseq_json(const BlockSeq& s) {
  json out;
  out["d"] = shape_json(s.shape());
  out["field"] = s.field().name();
  json blocks = json::array();
  for (const Matrix& b : s.blocks()) blocks.push_back(matrix_json(b));
  out["blocks"] = std::move(blocks);
  return out;
}

BlockSeq blockseq_from(const json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("blocks"))
    throw InputError("block sequence JSON needs \"d\" and \"blocks\"");
  const Shape sh = shape_from(j.at("d"));
  const Field f = j.contains("field") ? Field::parse(j.at("field").get<std::string>())
                                      : Field::rationals();
  const json& blocks = j.at("blocks");
  if (!blocks.is_array() || static_cast<int>(blocks.size()) != sh.k() - 1)
    throw InputError("block sequence needs exactly k-1 blocks");
  std::vector<Matrix> mats;
  for (int b = 0; b + 1 < sh.k(); ++b)
    mats.push_back(matrix_from(f, blocks[static_cast<std::size_t>(b)],
                               static_cast<std::size_t>(sh.size(b)),
                               static_cast<std::size_t>(sh.size(b + 1))));
  return BlockSeq(sh, f, std::move(mats));
}

json group_elem_json(const GroupElem& p) {
  json out;
  out["d"] = shape_json(p.shape());
  out["field"] = p.field().name();
  json polys = json::array();
  for (const auto& poly : p.polys()) {
    json c = json::array();
    for (const Scalar& s : poly) c.push_back(s.str());
    polys.push_back(std::move(c));
  }
  out["polys"] = std::move(polys);
  return out;
}

json nilreport_json(const NilReport& rep, bool include_basis) {
  json out;
  out["shape"] = shape_json(rep.shape);
  out["field"] = rep.field.name();
  out["rho"] = rep.rho;
  out["generators"] = rep.independent_generators;
  out["dim"] = static_cast<int>(rep.basis.dim());
  out["degree"] = rep.degree;
  out["lcs_dims"] = rep.lcs_dims;
  json gd = json::array();
  for (const auto& [t, dim] : rep.graded_dims) gd.push_back(json::array({t, dim}));
  out["graded_dims"] = std::move(gd);
  json bd = json::array();
  for (const auto& [b, dim] : rep.block_graded_dims) bd.push_back(json::array({b, dim}));
  out["block_graded_dims"] = std::move(bd);
  out["graded"] = rep.graded_basis;
  out["max_scalar_bits"] = rep.max_scalar_bits;
  if (include_basis) {
    json basis = json::array();
    for (std::size_t r = 0; r < rep.basis.dim(); ++r)
      basis.push_back(matrix_json(rep.basis.basis_matrix(r)));
    out["basis"] = std::move(basis);
  }
  return out;
}

json rank_table_json(const RankTable& t, bool include_witnesses) {
  json out;
  out["shape"] = shape_json(t.shape);
  json entries = json::array();
  for (const auto& [ij, r] : t.entries)
    entries.push_back(json::array({ij.first + 1, ij.second + 1, r}));  // 1-based blocks
  out["entries"] = std::move(entries);
  out["probe_discrepancy"] = t.probe_discrepancy;
  if (include_witnesses) {
    json ws = json::object();
    for (const auto& [ij, m] : t.witnesses)
      ws[std::to_string(ij.first + 1) + "," + std::to_string(ij.second + 1)] = matrix_json(m);
    out["witnesses"] = std::move(ws);
  }
  return out;
}

json rep_json(const RepSpec& rep, bool include_images) {
  json out;
  out["n"] = rep.n;
  out["lambda"] = rep.lambda.str();
  out["alpha"] = rep.alpha.str();
  out["d"] = shape_json(rep.shape);
  out["seq"] = blockseq_json(rep.seq);
  out["boundary"] = rep.boundary;
  if (include_images) {
    json imgs;
    imgs["x"] = matrix_json(rep.x_image);
    json vs = json::array();
    for (const Matrix& v : rep.v_images) vs.push_back(matrix_json(v));
    imgs["v"] = std::move(vs);
    out["images"] = std::move(imgs);
  }
  return out;
}

json class_record_json(const ClassRecord& r) {
  json out;
  out["k"] = r.k;
  out["shape"] = shape_json(r.shape);
  out["ell"] = r.ell;
  out["extreme"] = r.extreme;
  out["mode"] = r.admissible_for;
  return out;
}

json degree_prediction_json(const DegreePrediction& p) {
  json out;
  out["shape"] = shape_json(p.shape);
  out["normalized_seq"] = blockseq_json(p.normalized_seq);
  out["predicted_degree"] = p.predicted_degree;
  out["case"] = to_string(p.tag);
  return out;
}

json free_profile_json(const FreeProfile& p) {
  json out;
  out["rho"] = p.rho_gen;
  out["steps"] = p.steps;
  out["witt_dims"] = p.witt_dims;
  out["quotient_dims"] = p.quotient_dims;
  out["free"] = p.free_verdict;
  if (p.failing_degree) out["failing_degree"] = *p.failing_degree;
  out["predicted_free"] = p.predicted_free;
  if (p.predicted_profile)
    out["predicted_profile"] = json::array({p.predicted_profile->first, p.predicted_profile->second});
  return out;
}

}  // namespace detail

using detail::json;

std::string matrix_to_json(const Matrix& m) { return detail::matrix_json(m).dump(); }

Matrix matrix_from_json(const Field& f, const std::string& text) {
  const json j = detail::parse(text, "matrix");
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw InputError("matrix JSON must be a nonempty array of rows");
  return detail::matrix_from(f, j, j.size(), j[0].size());
}

std::string blockseq_to_json(const BlockSeq& seq) { return detail::blockseq_json(seq).dump(); }

BlockSeq blockseq_from_json(const std::string& text) {
  return detail::blockseq_from(detail::parse(text, "block sequence"));
}

BlockSeq blockseq_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open sequence file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return blockseq_from_json(ss.str());
}

std::string group_elem_to_json(const GroupElem& p) { return detail::group_elem_json(p).dump(); }

std::string normalize_result_to_json(const NormalizeResult& r) {
  json out;
  out["gauge"] = detail::group_elem_json(r.gauge);
  out["normalized"] = detail::blockseq_json(r.normalized);
  out["unique"] = r.unique;
  return out.dump();
}

std::string nilreport_to_json(const NilReport& rep, bool include_basis) {
  return detail::nilreport_json(rep, include_basis).dump();
}

std::string rank_table_to_json(const RankTable& t, bool include_witnesses) {
  return detail::rank_table_json(t, include_witnesses).dump();
}

std::string rep_to_json(const RepSpec& rep, bool include_images) {
  return detail::rep_json(rep, include_images).dump();
}

std::string class_records_to_json(const std::vector<ClassRecord>& records) {
  json out = json::array();
  for (const ClassRecord& r : records) out.push_back(detail::class_record_json(r));
  return out.dump();
}

std::string class_records_to_csv(const std::vector<ClassRecord>& records) {
  std::string out = "k,shape,ell,extreme,mode\n";
  for (const ClassRecord& r : records) {
    out += std::to_string(r.k) + ",\"" + r.shape.key() + "\"," + std::to_string(r.ell) + "," +
           (r.extreme ? "true" : "false") + "," + r.admissible_for + "\n";
  }
  return out;
}

std::string degree_prediction_to_json(const DegreePrediction& p) {
  return detail::degree_prediction_json(p).dump();
}

std::string free_profile_to_json(const FreeProfile& p) {
  return detail::free_profile_json(p).dump();
}

}  // namespace nilrad
