#include "setfam/turan.hpp"

#include <algorithm>
#include <cmath>

#include "setfam/boolean_algebra.hpp"
#include "setfam/constructions.hpp"
#include "setfam/errors.hpp"
#include "setfam/numeric.hpp"
#include "setfam/rng.hpp"

namespace setfam {

std::uint64_t MultipartiteHypergraph::edge_count() const {
  std::uint64_t m = 1;
  for (std::uint32_t a : part_sizes) m = checked_mul(m, a);
  return m;
}

std::uint64_t MultipartiteHypergraph::edge_id(std::span<const std::uint32_t> coords) const {
  std::uint64_t id = 0;
  std::uint64_t stride = 1;
  for (std::size_t i = 0; i < part_sizes.size(); ++i) {
    id += stride * (coords[i] - 1);
    stride *= part_sizes[i];
  }
  return id;
}

std::vector<std::uint32_t> MultipartiteHypergraph::edge_coords(std::uint64_t id) const {
  std::vector<std::uint32_t> coords(part_sizes.size());
  for (std::size_t i = 0; i < part_sizes.size(); ++i) {
    coords[i] = static_cast<std::uint32_t>(id % part_sizes[i]) + 1;
    id /= part_sizes[i];
  }
  return coords;
}

MultipartiteHypergraph build_kdk(std::uint32_t k, std::uint32_t d, std::uint64_t edge_budget) {
  if (k < 2 || d < 2) throw Error("K_d^(k) needs k >= 2 and d >= 2");
  MultipartiteHypergraph h;
  std::uint64_t e = 1;
  std::uint64_t edges = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    const std::uint64_t s = checked_pow(k, static_cast<std::uint32_t>(e));
    edges = checked_mul(edges, s);
    if (edges > edge_budget) {
      throw LimitExceededError("K_d^(k) would have over " + std::to_string(edge_budget) +
                               " edges");
    }
    h.part_sizes.push_back(static_cast<std::uint32_t>(s));
    e *= 2;
  }
  return h;
}

namespace {

// Depth-first over one vertex pair per part; visit(edge_ids) gets the 2^d
// transversal edge ids of a complete copy and returns false to stop.
struct CopyScan {
  const MultipartiteHypergraph& h;
  const IndexMask& edges;

  std::vector<std::uint32_t> lo, hi;  // chosen pair per part so far
  std::vector<std::uint64_t> ids;
  bool stopped = false;
  const std::function<bool(const std::vector<std::uint64_t>&)>* visit = nullptr;

  void run(const std::function<bool(const std::vector<std::uint64_t>&)>& v) {
    visit = &v;
    lo.clear();
    hi.clear();
    descend();
  }

  void descend() {
    const std::size_t part = lo.size();
    if (part == h.part_sizes.size()) {
      emit();
      return;
    }
    const std::uint32_t size = h.part_sizes[part];
    for (std::uint32_t u = 1; u <= size && !stopped; ++u) {
      for (std::uint32_t v = u + 1; v <= size && !stopped; ++v) {
        lo.push_back(u);
        hi.push_back(v);
        descend();
        lo.pop_back();
        hi.pop_back();
      }
    }
  }

  void emit() {
    const std::size_t d = h.part_sizes.size();
    ids.clear();
    std::vector<std::uint32_t> coords(d);
    for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << d); ++pick) {
      for (std::size_t i = 0; i < d; ++i) coords[i] = ((pick >> i) & 1) ? hi[i] : lo[i];
      const std::uint64_t id = h.edge_id(coords);
      if (!edges.test(id)) return;
      ids.push_back(id);
    }
    std::sort(ids.begin(), ids.end());
    if (!(*visit)(ids)) stopped = true;
  }
};

void for_each_kd2(const MultipartiteHypergraph& h, const IndexMask& edges,
                  const std::function<bool(const std::vector<std::uint64_t>&)>& visit) {
  CopyScan scan{h, edges, {}, {}, {}, false, nullptr};
  scan.run(visit);
}

std::optional<std::vector<std::uint64_t>> find_kd2(const MultipartiteHypergraph& h,
                                                   const IndexMask& edges) {
  std::optional<std::vector<std::uint64_t>> found;
  for_each_kd2(h, edges, [&](const std::vector<std::uint64_t>& ids) {
    found = ids;
    return false;
  });
  return found;
}

// Largest K_{2,2}-free edge count permitted by the pair budget: every
// vertex of one part covers C(deg,2) pairs of the other part, and each
// pair may be covered once.  Degrees are capped by the candidate set, and
// extra edges at a vertex have increasing marginal pair cost, so taking
// cheapest marginals first is exact for the relaxation.
std::uint64_t pair_budget_bound(const std::vector<std::uint32_t>& degs, std::uint64_t budget) {
  std::uint32_t max_deg = 0;
  for (std::uint32_t d : degs) max_deg = std::max(max_deg, d);
  std::uint64_t taken = 0;
  for (std::uint32_t level = 1; level <= max_deg; ++level) {
    std::uint64_t avail = 0;
    for (std::uint32_t d : degs) {
      if (d >= level) ++avail;
    }
    const std::uint64_t cost = level - 1;
    if (cost == 0) {
      taken += avail;
      continue;
    }
    const std::uint64_t affordable = std::min(avail, budget / cost);
    taken += affordable;
    budget -= affordable * cost;
    if (affordable < avail) break;
  }
  return taken;
}

std::uint64_t d2_upper_bound(const MultipartiteHypergraph& h, const IndexMask& cand) {
  const std::uint32_t a1 = h.part_sizes[0], a2 = h.part_sizes[1];
  std::vector<std::uint32_t> deg1(a1, 0), deg2(a2, 0);
  cand.for_each([&](std::uint32_t id) {
    ++deg1[id % a1];
    ++deg2[id / a1];
  });
  const std::uint64_t by2 = pair_budget_bound(deg2, binomial(a1, 2));
  const std::uint64_t by1 = pair_budget_bound(deg1, binomial(a2, 2));
  return std::min(by1, by2);
}

struct EdgeSearch {
  const MultipartiteHypergraph& h;
  const SearchConfig& cfg;
  const bool use_d2_bound;

  std::vector<std::uint32_t> incumbent;
  std::uint64_t nodes = 0;
  bool exhausted = true;

  void expand(IndexMask candidates, IndexMask required) {
    ++nodes;
    if (nodes >= cfg.node_limit) {
      exhausted = false;
      return;
    }
    if (candidates.count() <= incumbent.size()) return;
    if (use_d2_bound && d2_upper_bound(h, candidates) <= incumbent.size()) return;

    const auto copy = find_kd2(h, candidates);
    if (!copy) {
      incumbent = candidates.to_indices();
      return;
    }

    std::vector<std::uint64_t> participation(h.edge_count(), 0);
    for_each_kd2(h, candidates, [&](const std::vector<std::uint64_t>& ids) {
      for (std::uint64_t e : ids) ++participation[e];
      return true;
    });
    std::vector<std::uint64_t> parts = *copy;
    std::stable_sort(parts.begin(), parts.end(), [&](std::uint64_t x, std::uint64_t y) {
      return participation[x] > participation[y];
    });

    for (std::size_t i = 0; i < parts.size(); ++i) {
      const std::size_t v = static_cast<std::size_t>(parts[i]);
      if (!required.test(v)) {
        IndexMask next = candidates;
        next.reset(v);
        expand(std::move(next), required);
        if (!exhausted) return;
      }
      required.set(v);
    }
  }
};

}  // namespace

std::uint64_t count_kd2(const MultipartiteHypergraph& h, const IndexMask& edges) {
  std::uint64_t n = 0;
  for_each_kd2(h, edges, [&](const std::vector<std::uint64_t>&) {
    ++n;
    return true;
  });
  return n;
}

std::uint64_t count_kd2_complete(const MultipartiteHypergraph& h) {
  std::uint64_t n = 1;
  for (std::uint32_t a : h.part_sizes) n = checked_mul(n, binomial(a, 2));
  return n;
}

OracleResult ex_exact(const MultipartiteHypergraph& h, const SearchConfig& cfg) {
  const std::uint64_t m = h.edge_count();
  EdgeSearch s{h, cfg, h.part_sizes.size() == 2, {}, 0, true};

  if (cfg.initial) {
    auto init = *cfg.initial;
    std::sort(init.begin(), init.end());
    const IndexMask mask = IndexMask::from_indices(m, init);
    if (find_kd2(h, mask)) throw Error("initial incumbent contains a forbidden copy");
    s.incumbent = init;
  } else {
    IndexMask selected(m);
    for (std::uint32_t e = 0; e < m; ++e) {
      selected.set(e);
      if (find_kd2(h, selected)) selected.reset(e);
    }
    s.incumbent = selected.to_indices();
  }

  s.expand(IndexMask(m, true), IndexMask(m));

  OracleResult r;
  r.optimum = static_cast<std::uint32_t>(s.incumbent.size());
  r.witness = std::move(s.incumbent);
  r.proven = s.exhausted;
  r.nodes = s.nodes;
  if (find_kd2(h, IndexMask::from_indices(m, r.witness))) {
    throw InternalVerificationError("edge witness contains a forbidden copy");
  }
  return r;
}

double turan_bound(std::uint32_t k, std::uint32_t d) {
  if (k < 2 || d < 2) throw Error("bound needs k >= 2 and d >= 2");
  const double coeff = 2.0 - std::pow(2.0, 1.0 - static_cast<double>(d));
  return coeff * std::pow(static_cast<double>(k), std::pow(2.0, d) - 2.0);
}

std::uint64_t base_case_bound(std::uint32_t k) { return binomial(k, 2) + checked_mul(k, k); }

BijectionReport family_hypergraph_bijection(std::uint32_t k, std::uint32_t d, std::uint64_t seed,
                                            std::uint32_t samples) {
  const SetFamily fam = bd_extremal_family(k, d);
  const MultipartiteHypergraph h = build_kdk(k, d);

  BijectionReport rep;
  rep.members = fam.size();
  rep.edges = h.edge_count();
  if (rep.members != rep.edges) {
    throw BijectionViolatedError("member count " + std::to_string(rep.members) +
                                 " differs from edge count " + std::to_string(rep.edges));
  }

  // Member i must be the union of per-chain prefixes selected by the
  // coordinates of edge i.
  std::vector<std::uint32_t> offsets(d, 0);
  for (std::uint32_t i = 1; i < d; ++i) offsets[i] = offsets[i - 1] + h.part_sizes[i - 1];
  const std::size_t w = FiniteSet::words_for_universe(fam.universe_size());
  for (std::uint64_t id = 0; id < rep.edges; ++id) {
    const auto coords = h.edge_coords(id);
    FiniteSet expect(w);
    for (std::uint32_t i = 0; i < d; ++i) {
      for (std::uint32_t e = 1; e <= coords[i]; ++e) expect.insert(offsets[i] + e);
    }
    if (!(fam.member(id) == expect)) {
      throw BijectionViolatedError("member " + std::to_string(id) +
                                   " does not match its edge image");
    }
  }

  rep.family_witnesses = count_boolean_algebras(fam, d);
  rep.hypergraph_copies = count_kd2_complete(h);
  if (rep.family_witnesses != rep.hypergraph_copies) {
    throw BijectionViolatedError("witness count " + std::to_string(rep.family_witnesses) +
                                 " differs from copy count " +
                                 std::to_string(rep.hypergraph_copies));
  }

  std::mt19937_64 rng = stream_rng(seed, 0x6b6432);
  for (std::uint32_t s = 0; s < samples; ++s) {
    IndexMask edges(rep.edges);
    for (std::uint64_t e = 0; e < rep.edges; ++e) {
      if (unit_uniform(rng) < 0.5) edges.set(e);
    }
    const bool family_free = !find_boolean_algebra(fam, edges, d).has_value();
    const bool graph_free = count_kd2(h, edges) == 0;
    if (family_free != graph_free) {
      throw BijectionViolatedError("sample " + std::to_string(s) +
                                   ": freeness disagrees between family and hypergraph");
    }
  }
  rep.sampled_subfamilies = samples;
  rep.ok = true;
  return rep;
}

}  // namespace setfam
