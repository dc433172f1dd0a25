#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "setfam/family.hpp"
#include "setfam/index_mask.hpp"
#include "setfam/oracle.hpp"

namespace setfam {

// Complete d-partite d-uniform hypergraph with parts X_1..X_d; an edge
// takes one vertex per part.  Edges are addressed by mixed-radix ids with
// coordinate 1 varying fastest, matching the chain-product member order, so
// the family <-> hypergraph correspondence is id = member index.
struct MultipartiteHypergraph {
  std::vector<std::uint32_t> part_sizes;

  std::uint64_t edge_count() const;
  std::uint64_t edge_id(std::span<const std::uint32_t> coords) const;  // coords 1-based
  std::vector<std::uint32_t> edge_coords(std::uint64_t id) const;
};

// Parts of sizes k, k^2, k^4, ..., k^{2^{d-1}}.
MultipartiteHypergraph build_kdk(std::uint32_t k, std::uint32_t d,
                                 std::uint64_t edge_budget = 1'000'000);

// Number of K_{d*2} copies inside the edge subset: one vertex pair per part
// with all 2^d transversal edges present.
std::uint64_t count_kd2(const MultipartiteHypergraph& h, const IndexMask& edges);
std::uint64_t count_kd2_complete(const MultipartiteHypergraph& h);

// Maximum K_{d*2}-free edge subset, by the same branch-and-bound scheme as
// the family oracle; for d=2 a pair-budget relaxation tightens the pruning.
OracleResult ex_exact(const MultipartiteHypergraph& h, const SearchConfig& cfg = {});

// Theorem-level values: (2 - 2^{1-d}) k^{2^d - 2}, and the d=2 proof's
// sharper count C(k,2) + k^2.
double turan_bound(std::uint32_t k, std::uint32_t d);
std::uint64_t base_case_bound(std::uint32_t k);

struct BijectionReport {
  std::uint64_t members = 0;
  std::uint64_t edges = 0;
  std::uint64_t family_witnesses = 0;
  std::uint64_t hypergraph_copies = 0;
  std::uint32_t sampled_subfamilies = 0;
  bool ok = false;
};

// Certifies the correspondence for bd_extremal_family(k,d) vs K_d^{(k)}:
// member i <-> edge i set-for-set, witness count equals copy count, and
// B_d-freeness transfers on `samples` random edge subsets.  Any mismatch
// throws BijectionViolatedError.
BijectionReport family_hypergraph_bijection(std::uint32_t k, std::uint32_t d, std::uint64_t seed,
                                            std::uint32_t samples);

}  // namespace setfam
