#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "setfam/family.hpp"

namespace setfam {

// Lattice view of subfamilies of F_ES(k): member A_i ∪ B_j becomes the
// point (i, j), 1-based, x along the A-chain.
struct GridPoint {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  bool operator==(const GridPoint&) const = default;
  auto operator<=>(const GridPoint&) const = default;
};

struct GridPointSet {
  std::uint32_t k = 0;
  std::vector<GridPoint> points;  // distinct, in source member order

  bool contains(std::uint32_t x, std::uint32_t y) const;
};

// The point whose lower-left rectangle witnesses a union violation, plus a
// covering points including one from the top boundary (y equal, x smaller)
// and one from the right column (x equal, y smaller).
struct GridViolation {
  GridPoint point;
  std::vector<GridPoint> covering;
};

// Translates a subfamily of F_ES(k); every member must occur in F_ES(k)
// over the same universe.
GridPointSet to_grid(const SetFamily& g, std::uint32_t k);

// True iff (i,j) is in P and R(i,j) = [1,i]×[1,j] holds at least a points
// of P besides (i,j), among them a top-boundary point and a right-column
// point.  The two roles can never be filled by one point.
bool point_violates(const GridPointSet& p, GridPoint pt, std::uint32_t a);

// Lexicographically smallest violating (i,j), with a deterministic covering:
// smallest top-boundary point, smallest right-column point, then smallest
// remaining rectangle points.
std::optional<GridViolation> grid_violation(const GridPointSet& p, std::uint32_t a);

// Removes the min(ceil_sqrt(a+1)-1, column size) lowest points of every
// column; output in (x, y) lexicographic order.
GridPointSet column_prune(const GridPointSet& p, std::uint32_t a);

// 2(ceil_sqrt(a+1)-1)k, the size bound on a-union-free subfamilies.
std::uint64_t lemma41_bound(std::uint64_t k, std::uint64_t a);

// Cross-validation: the rectangle criterion and the definitional union scan
// must agree on whether g has a violation.
bool grid_equivalence_check(const SetFamily& g, std::uint32_t k, std::uint32_t a);

// ASCII matrix, row y=k on top, '#' occupied.
std::string render_grid(const GridPointSet& p);

}  // namespace setfam
