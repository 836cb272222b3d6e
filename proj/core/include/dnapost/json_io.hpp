#pragma once

#include <string>

#include "dnapost/graph.hpp"
#include "dnapost/oracle.hpp"
#include "dnapost/pipeline.hpp"

namespace dnapost {

// Instance file format:
//   {"vertices": n,
//    "edges": [{"u": 1, "v": 2, "len": 3, "required": true}, ...],
//    "budget": B}
// Vertices are 1-indexed; "required" defaults to false, "len" to 1.
// Schema problems throw ValidationError with kind "json".
RppInstance instance_from_json(const std::string& text);
std::string instance_to_json(const RppInstance& instance);

// Decision and oracle serializations. JSON output is deterministic byte for
// byte for a given decision: keys are sorted and wall time is omitted (it
// appears only in the text form).
std::string decision_json(const Decision& d);
std::string decision_text(const Decision& d);
std::string oracle_json(const OracleResult& r, std::int64_t budget);
std::string oracle_text(const OracleResult& r, std::int64_t budget);

} // namespace dnapost
