#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "sgp/gorenstein.hpp"
#include "sgp/rf.hpp"
#include "sgp/semigroup.hpp"
#include "sgp/verify.hpp"

namespace sgp {

// Structured output. Every record is a single JSON line
//   {"kind": ..., "payload": {...}, "schema_version": "1"}
// Keys are emitted in sorted order. Generator indices (h, ell, witness rows
// and columns) are 1-based, matching the usual n_1 < ... < n_nu notation.

inline constexpr std::string_view kSchemaVersion = "1";

nlohmann::json matrix_json(const IntMatrix& a);
nlohmann::json rf_matrix_json(const RFMatrix& a);
nlohmann::json ng_vector_json(const NGVector& v);
nlohmann::json classification_json(const PFClassification& cls);
nlohmann::json info_json(const NumericalSemigroup& s);
nlohmann::json report_json(const CheckReport& r);
nlohmann::json summary_json(const Summary& s);

nlohmann::json make_record(std::string_view kind, nlohmann::json payload);
std::string dump_line(const nlohmann::json& record);

}  // namespace sgp
