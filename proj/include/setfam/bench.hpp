#pragma once

#include <optional>
#include <string>
#include <vector>

#include "setfam/bounds.hpp"
#include "setfam/serialize.hpp"

namespace setfam {

// One measurement: a method applied to a family under a property.  Rows
// that fail keep their slot with the error recorded, so a table always has
// the suite's full shape.
struct BenchRow {
  std::string family;
  std::uint64_t m = 0;
  std::string property;
  std::string method;
  std::uint32_t size = 0;
  std::optional<double> guarantee;  // extraction rows
  std::optional<bool> proven;       // exact rows
  std::vector<NamedBound> bounds;
  std::string error;
  double elapsed_ms = 0.0;  // only serialized when timing was requested
};

struct BenchTable {
  RunManifest manifest;
  std::vector<BenchRow> rows;
};

// Suites: "b2-small" runs random deletion against the exact oracle on
// 2^[n] for n in {3,4,5}; "uf-es" runs the rank splitter against the exact
// oracle on F_ES(k) for k in {2,3}; "all" is both in that order; "none" is
// the empty suite.  Row i of a run uses RNG seed `seed + i`, so a table is
// a pure function of (suite, seed).
BenchTable run_bench(const std::string& suite, std::uint64_t seed,
                     bool timing = false);

bool known_suite(const std::string& suite);

// Canonical JSON: manifest plus rows, timing fields omitted unless asked
// for.  Replaying the embedded manifest reproduces the canonical form byte
// for byte.
nlohmann::json to_json(const BenchTable& t, bool timing = false);
std::string bench_csv(const BenchTable& t);

// Re-runs the suite and seed recorded in a table's manifest.
BenchTable replay_bench(const RunManifest& m);

}  // namespace setfam
