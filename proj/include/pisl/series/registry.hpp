#pragma once

// Registry and report files.
//
// Registry: JSON array of
//   {"id", "status", "a", "b", "base": "p/q", "term_kind": {"name", params...},
//    "rhs": "<expression>", "paper_tag"}
// Integer fields accept JSON numbers or decimal strings; rational fields are
// strings "p/q" (or numbers). term_kind params by name:
//   W, F_only, B2k_F, B2n_conv_recip: x      B2n_conv12, S_poly: y
//   B2k_TT: b1, c1, b2, c2                   B2k2_T: b, c        F4: none

#include "pisl/series/entry.hpp"
#include "pisl/series/summation.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace pisl::series {

using Json = nlohmann::json;

TermKind term_kind_from_json(const Json& j);
Json to_json(const TermKind& kind);

BigInt json_integer(const Json& j);
BigRational json_rational(const Json& j);

/// Throws std::invalid_argument with the offending id on malformed input.
SeriesEntry entry_from_json(const Json& j);
Json to_json(const SeriesEntry& e);

/// Parses a registry array; ids must be unique.
std::vector<SeriesEntry> parse_registry(const Json& j);
std::vector<SeriesEntry> load_registry(const std::string& path);

/// $PI_SERIES_LAB_DATA or the data directory of the source tree.
std::string default_data_dir();
std::string default_registry_path();

/// Entry with the given id, or nullptr.
const SeriesEntry* find_entry(const std::vector<SeriesEntry>& reg, const std::string& id);

Json to_json(const VerifyReport& r);

}  // namespace pisl::series
