#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "setfam/family.hpp"
#include "setfam/property.hpp"

namespace setfam {

struct SearchConfig {
  std::uint64_t node_limit = 5'000'000;
  // 0 disables the wall-clock cut; leaving it off keeps searches
  // deterministic, which replayable runs rely on.
  std::uint64_t time_limit_ms = 0;
  // Known-good subfamily used as the starting incumbent; verified before use.
  std::optional<std::vector<std::uint32_t>> initial;
};

struct OracleResult {
  std::uint32_t optimum = 0;
  std::vector<std::uint32_t> witness;  // ascending member indices
  // True iff the search tree was exhausted, certifying optimality.
  bool proven = false;
  std::uint64_t nodes = 0;
};

// Exact maximum subfamily with the property, by branch and bound over
// deletion decisions: find one minimal violating configuration, branch on
// which participant to delete.  Hitting a limit returns the incumbent with
// proven=false rather than failing.
OracleResult max_subfamily(const SetFamily& f, const Property& p, const SearchConfig& cfg = {});

struct MinFamiliesResult {
  std::uint32_t value = 0;
  std::vector<std::vector<std::uint32_t>> worst_family;  // element lists
  std::uint32_t universe = 0;
  std::uint64_t families_examined = 0;  // canonical representatives
  bool proven = true;
};

// min over all m-member families inside 2^[n] of max_subfamily, up to
// ground-element permutation.  Refuses instances whose raw enumeration
// C(2^n, m) exceeds the budget.
MinFamiliesResult min_over_families(std::uint32_t m, std::uint32_t n, const Property& p,
                                    const SearchConfig& cfg = {},
                                    std::uint64_t budget = 1'000'000);

}  // namespace setfam
