#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "setfam/family.hpp"
#include "setfam/property.hpp"

namespace setfam {

struct TrialStats {
  std::uint32_t trials = 0;
  std::uint32_t best = 0;
  double mean = 0.0;
};

struct ExtractionResult {
  std::vector<std::uint32_t> indices;  // ascending member indices
  Property property;
  // Certified lower bound on what the method achieves on this input; the
  // extracted size is >= ceil(guarantee) whenever pessimistic is false.
  double guarantee = 0.0;
  // True when the deletion guarantee had to fall back from the exact
  // witness count to the binomial cap.
  bool guarantee_pessimistic = false;
  std::string method;
  bool randomized = false;
  std::uint64_t seed = 0;
  double probability = 0.0;  // random-deletion only
  TrialStats stats;          // random-deletion only
};

// Sampling probability from the first-moment calculation: d=2 uses
// 2^{-1/3} m^{-1/3}; d >= 3 uses m^{-(ceil_log2(d+2)-1)/(2^d-1)}.
double default_probability(std::uint64_t m, std::uint32_t d);

// First-moment guarantee m p - p^{2^d} * witness_count.
double deletion_guarantee(std::uint64_t m, std::uint32_t d, double p,
                          std::uint64_t witness_count);

// Per trial: keep each member independently with probability p, then delete
// the member hitting the most remaining witnesses until none are left.
// Returns the best trial.  Trials run in parallel (SETFAM_THREADS); each
// trial's RNG stream is derived from (seed, trial), so the schedule cannot
// change results.
ExtractionResult random_deletion_bd_free(const SetFamily& f, std::uint32_t d, double p,
                                         std::uint64_t seed, std::uint32_t trials);

// Rank-splitting: the best antichain level plus a maximum chain into it.
ExtractionResult kleitman_extract(const SetFamily& f, std::uint32_t a);

enum class GreedyOrder { Given, SizeAscending, SizeDescending };

ExtractionResult greedy_extract(const SetFamily& f, const Property& p, GreedyOrder order);

}  // namespace setfam
