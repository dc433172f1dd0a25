#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "setfam/boolean_algebra.hpp"
#include "setfam/bounds.hpp"
#include "setfam/extraction.hpp"
#include "setfam/grid.hpp"
#include "setfam/oracle.hpp"
#include "setfam/turan.hpp"

namespace setfam {

inline constexpr const char* kToolVersion = "0.1.0";

// Every output file embeds one of these; re-running a manifest must
// reproduce randomized outputs bit-exactly.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> flags;
  std::uint64_t seed = 0;
  bool seeded = false;
  std::string version = kToolVersion;
  std::string input_digest;  // fnv1a-64 hex of the input file, "" when none
};

std::string fnv1a_hex(const std::string& bytes);

nlohmann::json to_json(const RunManifest& m);
RunManifest manifest_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BooleanAlgebraWitness& w);
nlohmann::json to_json(const ExtractionResult& r);
nlohmann::json to_json(const OracleResult& r);
nlohmann::json to_json(const MinFamiliesResult& r);
nlohmann::json to_json(const BijectionReport& r);
nlohmann::json to_json(const NamedBound& b);
nlohmann::json to_json(const GridPointSet& p);
nlohmann::json to_json(const GridViolation& v);

// Canonical rendering used everywhere an output might be compared or
// replayed: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const nlohmann::json& j);

}  // namespace setfam
