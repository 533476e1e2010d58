#pragma once

#include <string>
#include <vector>

#include "nilrad/nilradical.hpp"
#include "nilrad/reps.hpp"
#include "nilrad/theory.hpp"

namespace nilrad {

// JSON wire formats. Scalars are strings ("a", "a/b", "r mod p"); matrices
// are arrays of arrays of scalar strings; block sequences carry their shape
// and field tag: {"d": [...], "field": "Q"|"Fp:<p>", "blocks": [...]}.

std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const std::string& text);

std::string blockseq_to_json(const BlockSeq& seq);
BlockSeq blockseq_from_json(const std::string& text);
BlockSeq blockseq_from_file(const std::string& path);

std::string group_elem_to_json(const GroupElem& p);
std::string normalize_result_to_json(const NormalizeResult& r);

std::string nilreport_to_json(const NilReport& rep, bool include_basis = false);
std::string rank_table_to_json(const RankTable& t, bool include_witnesses = false);

std::string rep_to_json(const RepSpec& rep, bool include_images = false);

std::string class_records_to_json(const std::vector<ClassRecord>& records);
std::string class_records_to_csv(const std::vector<ClassRecord>& records);

std::string degree_prediction_to_json(const DegreePrediction& p);
std::string free_profile_to_json(const FreeProfile& p);

}  // namespace nilrad
