#pragma once

#include <string>

#include "cgr/theorems.hpp"

#include "json.hpp"

namespace cgr {

using Json = nlohmann::json;

// Embedding file format:
// {"graph": "K6", "vertices": {"1": ["x", "y", "z"], ...},
//  "edge_paths": {"1-2": [["x","y","z"], ...], ...}}
// Rationals are "p/q" strings; plain integers are accepted. D4 edge-path keys
// are "e1".."e8" because of the parallel edges. Save/load round-trips
// bit-exactly.
Json embedding_to_json(const SpatialEmbedding& e);
SpatialEmbedding embedding_from_json(const Json& j);

Json identity_to_json(const IdentityReport& r);
Json census_to_json(const CensusReport& r, const GraphSpec& spec);
Json invariant_report_to_json(const InvariantReport& r);
Json fm_bounds_to_json(const FmBoundsReport& r);

// Per-cycle and per-pair tables, canonical bracket notation.
std::string invariant_report_csv(const InvariantReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace cgr
