// Internal: object-level JSON converters shared by serialize.cpp and
// sweep.cpp. Not installed; the public API deals in strings.
#pragma once

#include <json.hpp>

#include "nilrad/blockstruct.hpp"
#include "nilrad/nilradical.hpp"
#include "nilrad/reps.hpp"
#include "nilrad/theory.hpp"

namespace nilrad::detail {

using json = nlohmann::ordered_json;

json matrix_json(const Matrix& m);
Matrix matrix_from(const Field& f, const json& j, std::size_t rows, std::size_t cols);

json shape_json(const Shape& s);
Shape shape_from(const json& j);

json blockseq_json(const BlockSeq& s);
BlockSeq blockseq_from(const json& j);

json group_elem_json(const GroupElem& p);
json nilreport_json(const NilReport& rep, bool include_basis);
json rank_table_json(const RankTable& t, bool include_witnesses);
json rep_json(const RepSpec& rep, bool include_images);
json class_record_json(const ClassRecord& r);
json degree_prediction_json(const DegreePrediction& p);
json free_profile_json(const FreeProfile& p);

/// Parses text, wrapping parse failures into InputError.
json parse(const std::string& text, const std::string& what);

}  // namespace nilrad::detail
