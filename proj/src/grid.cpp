#include "setfam/grid.hpp"

#include <algorithm>
#include <sstream>

#include "setfam/constructions.hpp"
#include "setfam/errors.hpp"
#include "setfam/numeric.hpp"

namespace setfam {

bool GridPointSet::contains(std::uint32_t x, std::uint32_t y) const {
  return std::find(points.begin(), points.end(), GridPoint{x, y}) != points.end();
}

GridPointSet to_grid(const SetFamily& g, std::uint32_t k) {
  const SetFamily es = erdos_shelah_family(k);
  if (g.universe_size() != es.universe_size()) {
    throw NotASubfamilyError("family universe " + std::to_string(g.universe_size()) +
                             " does not match F_ES(" + std::to_string(k) + ") universe " +
                             std::to_string(es.universe_size()));
  }
  GridPointSet p;
  p.k = k;
  p.points.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto idx = es.find(g.member_words(i));
    if (!idx) {
      throw NotASubfamilyError("member " + std::to_string(i) + " is not a member of F_ES(" +
                               std::to_string(k) + ")");
    }
    // Member order in F_ES is j1-fastest, so index = (j2-1)*k + (j1-1).
    p.points.push_back({*idx % k + 1, *idx / k + 1});
  }
  return p;
}

bool point_violates(const GridPointSet& p, GridPoint pt, std::uint32_t a) {
  if (!p.contains(pt.x, pt.y)) return false;
  std::uint32_t inside = 0;
  bool top = false, right = false;
  for (const GridPoint& q : p.points) {
    if (q == pt || q.x > pt.x || q.y > pt.y) continue;
    ++inside;
    if (q.y == pt.y) top = true;
    if (q.x == pt.x) right = true;
  }
  return inside >= a && top && right;
}

std::optional<GridViolation> grid_violation(const GridPointSet& p, std::uint32_t a) {
  if (a < 2) throw Error("grid violation needs a >= 2");
  std::vector<GridPoint> sorted(p.points);
  std::sort(sorted.begin(), sorted.end());
  for (const GridPoint& pt : sorted) {
    if (!point_violates(p, pt, a)) continue;

    std::vector<GridPoint> rect;
    for (const GridPoint& q : sorted) {
      if (!(q == pt) && q.x <= pt.x && q.y <= pt.y) rect.push_back(q);
    }
    GridViolation v;
    v.point = pt;
    const auto top = *std::find_if(rect.begin(), rect.end(),
                                   [&](const GridPoint& q) { return q.y == pt.y; });
    const auto right = *std::find_if(rect.begin(), rect.end(),
                                     [&](const GridPoint& q) { return q.x == pt.x; });
    v.covering = {top, right};
    for (const GridPoint& q : rect) {
      if (v.covering.size() == a) break;
      if (q == top || q == right) continue;
      v.covering.push_back(q);
    }
    std::sort(v.covering.begin(), v.covering.end());
    return v;
  }
  return std::nullopt;
}

GridPointSet column_prune(const GridPointSet& p, std::uint32_t a) {
  if (a < 2) throw Error("column prune needs a >= 2");
  const std::uint64_t drop = ceil_sqrt(std::uint64_t{a} + 1) - 1;
  GridPointSet out;
  out.k = p.k;
  std::vector<GridPoint> sorted(p.points);
  std::sort(sorted.begin(), sorted.end());
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j].x == sorted[i].x) ++j;
    // sorted[i..j) is one column, y ascending.
    for (std::size_t t = i + std::min<std::size_t>(drop, j - i); t < j; ++t) {
      out.points.push_back(sorted[t]);
    }
    i = j;
  }
  return out;
}

std::uint64_t lemma41_bound(std::uint64_t k, std::uint64_t a) {
  if (k < 1 || a < 2) throw Error("bound needs k >= 1 and a >= 2");
  return 2 * (ceil_sqrt(a + 1) - 1) * k;
}

bool grid_equivalence_check(const SetFamily& g, std::uint32_t k, std::uint32_t a) {
  const bool rectangle = grid_violation(to_grid(g, k), a).has_value();
  const bool definitional = !is_a_union_free(g, a);
  return rectangle == definitional;
}

std::string render_grid(const GridPointSet& p) {
  std::ostringstream out;
  for (std::uint32_t y = p.k; y >= 1; --y) {
    for (std::uint32_t x = 1; x <= p.k; ++x) {
      out << (p.contains(x, y) ? '#' : '.');
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace setfam
