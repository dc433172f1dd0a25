#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "setfam/family.hpp"

namespace setfam {

// Every named family is generated over contiguous per-chain (or per-level)
// blocks of fresh ground elements and in a frozen member order, so indices
// quoted anywhere downstream stay meaningful.

// Product of d chains with sizes s_1..s_d: member (j_1,...,j_d) is the
// union of the first j_i elements of each chain's block; j_1 varies
// fastest.  Size is the product of the sizes.
SetFamily chain_product(std::span<const std::uint32_t> chain_sizes,
                        std::uint32_t max_universe = 4096);

// F_ES(k): product of two chains of length k; member (i,j) is A_i ∪ B_j.
SetFamily erdos_shelah_family(std::uint32_t k);

// Product of chains of sizes k, k^2, k^4, ..., k^{2^{d-1}}; m = k^{2^d - 1}.
SetFamily bd_extremal_family(std::uint32_t k, std::uint32_t d,
                             std::uint32_t max_universe = 4096);

// q stacked levels, level l isomorphic to F_ES(k_l); members of level l
// contain every element used by lower levels, so the cross-level subset
// property holds.  Member order: levels bottom up, F_ES order inside.
SetFamily leveled_family(std::span<const std::uint32_t> level_sizes,
                         std::uint32_t max_universe = 4096);
SetFamily leveled_family(std::uint32_t q, std::uint32_t k, std::uint32_t max_universe = 4096);

// Level sizes k_l = k * ((b-1)/(b-2))^{2(l-1)} rounded to nearest, with
// b = ceil_sqrt(a+1); rejects a < 4 where b-2 = 0 makes the ratio undefined.
std::vector<std::uint32_t> geometric_level_sizes(std::uint32_t a, std::uint32_t k,
                                                 std::uint32_t q);
SetFamily geometric_leveled_family(std::uint32_t a, std::uint32_t k, std::uint32_t q,
                                   std::uint32_t max_universe = 4096);

// All (m-1)-subsets of [m], ordered lexicographically by element list
// (excluded element descending).
SetFamily co_singleton_family(std::uint32_t m);

// All 2^n subsets of [n], ordered by numeric value of the membership mask.
SetFamily power_set_family(std::uint32_t n, std::uint32_t max_universe = 64);

}  // namespace setfam
