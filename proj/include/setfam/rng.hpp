#pragma once

#include <cstdint>
#include <random>

namespace setfam {

// One deterministic generator per (seed, stream) pair.  Streams let
// independent work items (trials, samples) draw reproducibly no matter
// which thread runs them.
inline std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                   static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(sq);
}

// Uniform in [0,1) from the top 53 bits; avoids std::uniform_real_distribution,
// whose output is not pinned down by the standard.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace setfam
