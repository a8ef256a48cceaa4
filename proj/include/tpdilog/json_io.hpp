#pragma once

// JSON formats. Rationals are strings, always written as "p/q".
//   matrix: {"n": 3, "entries": [["1/1", "5/1", "6/1"], ...]}
//   coords: {"n": 3, "x": {"1,2": "3/1", "1,3": "2/1", "2,3": "2/1"}}
//   report: {"identities": [{"max_residual": "...", "name": "...", "pass": true}],
//            "n": 4, "precision_bits": 128, "seed": 7, "trials": 20}
// Object keys come out sorted. Parse failures throw std::invalid_argument.

#include "tpdilog/identities.hpp"

#include <json.hpp>

#include <string>

namespace tpdilog {

using Json = nlohmann::json;

Json to_json(const RMatrix& m);
Json to_json(const Coords& x);
Json to_json(const IdentityReport& report);

RMatrix matrix_from_json(const Json& j);
Coords coords_from_json(const Json& j);
IdentityReport report_from_json(const Json& j);

bool is_matrix_json(const Json& j);
bool is_coords_json(const Json& j);

/// Two-space indented dump with a trailing newline.
std::string dump_canonical(const Json& j);

/// Parses text, mapping JSON syntax errors to std::invalid_argument.
Json parse_json(const std::string& text);

}  // namespace tpdilog
