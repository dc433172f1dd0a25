#include "setfam/boolean_algebra.hpp"

#include <algorithm>
#include <unordered_set>

#include "setfam/errors.hpp"
#include "setfam/numeric.hpp"

namespace setfam {

FiniteSet BooleanAlgebraWitness::set_for_mask(std::uint32_t mask) const {
  FiniteSet s = base;
  for (std::uint32_t i = 0; i < dimension; ++i) {
    if ((mask >> i) & 1) s |= atoms[i];
  }
  return s;
}

namespace {

// Dimension 1 is a proper-subset pair (B_∅, B_{1}); handled apart from the
// combination walk below, which needs at least two generators to recover
// the base by intersection.
bool enumerate_d1(const SetFamily& f, const std::vector<std::uint32_t>& cand,
                  const EnumerationOptions& opts,
                  const std::function<bool(const BooleanAlgebraWitness&)>& visit) {
  for (std::uint32_t i : cand) {
    const FiniteSet lo = f.member(i);
    if (opts.require_nonempty_base && lo.empty()) continue;
    for (std::uint32_t j : cand) {
      if (i == j) continue;
      const FiniteSet hi = f.member(j);
      if (!lo.proper_subset_of(hi)) continue;
      BooleanAlgebraWitness w;
      w.dimension = 1;
      w.base = lo;
      w.atoms = {hi - lo};
      w.member_of_mask = {i, j};
      if (!visit(w)) return false;
    }
  }
  return true;
}

struct Enumerator {
  const SetFamily& f;
  const IndexMask& candidates;
  std::uint32_t d;
  const EnumerationOptions& opts;
  const std::function<bool(const BooleanAlgebraWitness&)>& visit;

  std::vector<std::uint32_t> cand;
  std::vector<std::uint32_t> picked;
  bool stopped = false;

  bool run() {
    cand = candidates.to_indices();
    if (d == 1) return enumerate_d1(f, cand, opts, visit);
    if (cand.size() < (std::size_t{1} << d)) return true;
    descend(0);
    return !stopped;
  }

  // Combinations of candidate members standing for (B_{1}, ..., B_{d}); a
  // valid algebra is recovered from exactly one combination, its set of
  // singleton-indexed members, so no two combinations emit the same witness.
  void descend(std::size_t start) {
    if (picked.size() == d) {
      check_combination();
      return;
    }
    for (std::size_t p = start; p < cand.size() && !stopped; ++p) {
      if (cand.size() - p < d - picked.size()) break;
      picked.push_back(cand[p]);
      descend(p + 1);
      picked.pop_back();
    }
  }

  void check_combination() {
    FiniteSet base = f.member(picked[0]);
    for (std::size_t t = 1; t < d; ++t) base = base & f.member(picked[t]);

    std::vector<FiniteSet> atoms;
    atoms.reserve(d);
    for (std::size_t t = 0; t < d; ++t) {
      FiniteSet a = f.member(picked[t]) - base;
      if (a.empty()) return;
      atoms.push_back(std::move(a));
    }
    for (std::size_t x = 0; x < d; ++x) {
      for (std::size_t y = x + 1; y < d; ++y) {
        if (!atoms[x].disjoint_with(atoms[y])) return;
      }
    }
    if (opts.require_nonempty_base && base.empty()) return;

    // Canonical atom order before the membership pass, so member_of_mask is
    // built directly against final atom positions.
    std::vector<std::uint32_t> order(d);
    for (std::uint32_t t = 0; t < d; ++t) order[t] = t;
    std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
      return atoms[x].smallest_element() < atoms[y].smallest_element();
    });

    BooleanAlgebraWitness w;
    w.dimension = d;
    w.base = base;
    w.atoms.reserve(d);
    for (std::uint32_t t : order) w.atoms.push_back(atoms[t]);
    w.member_of_mask.assign(std::size_t{1} << d, 0);

    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << d); ++mask) {
      const FiniteSet s = w.set_for_mask(mask);
      const auto idx = f.find(s);
      if (!idx || !candidates.test(*idx)) return;
      w.member_of_mask[mask] = *idx;
    }
    if (!visit(w)) stopped = true;
  }
};

}  // namespace

bool for_each_boolean_algebra(const SetFamily& f, const IndexMask& candidates, std::uint32_t d,
                              const EnumerationOptions& opts,
                              const std::function<bool(const BooleanAlgebraWitness&)>& visit) {
  if (d < 1) throw Error("dimension must be at least 1");
  Enumerator e{f, candidates, d, opts, visit, {}, {}, false};
  return e.run();
}

EnumerationResult enumerate_boolean_algebras(const SetFamily& f, std::uint32_t d,
                                             const EnumerationOptions& opts) {
  EnumerationResult r;
  const bool exhausted = for_each_boolean_algebra(
      f, f.full_mask(), d, opts, [&](const BooleanAlgebraWitness& w) {
        if (r.witnesses.size() == opts.limit) {
          r.complete = false;
          return false;
        }
        r.witnesses.push_back(w);
        return true;
      });
  if (!exhausted && r.complete) r.complete = false;
  return r;
}

std::uint64_t count_boolean_algebras(const SetFamily& f, const IndexMask& candidates,
                                     std::uint32_t d, bool require_nonempty_base) {
  EnumerationOptions opts;
  opts.require_nonempty_base = require_nonempty_base;
  std::uint64_t n = 0;
  for_each_boolean_algebra(f, candidates, d, opts, [&](const BooleanAlgebraWitness&) {
    ++n;
    return true;
  });
  return n;
}

std::uint64_t count_boolean_algebras(const SetFamily& f, std::uint32_t d,
                                     bool require_nonempty_base) {
  return count_boolean_algebras(f, f.full_mask(), d, require_nonempty_base);
}

std::optional<BooleanAlgebraWitness> find_boolean_algebra(const SetFamily& f,
                                                          const IndexMask& candidates,
                                                          std::uint32_t d) {
  std::optional<BooleanAlgebraWitness> found;
  for_each_boolean_algebra(f, candidates, d, EnumerationOptions{},
                           [&](const BooleanAlgebraWitness& w) {
                             found = w;
                             return false;
                           });
  return found;
}

bool is_bd_free(const SetFamily& f, std::uint32_t d) {
  return !find_boolean_algebra(f, f.full_mask(), d).has_value();
}

bool verify_witness(const SetFamily& f, const BooleanAlgebraWitness& w) {
  const std::uint32_t d = w.dimension;
  if (d < 1 || w.atoms.size() != d) return false;
  const std::uint32_t n_masks = std::uint32_t{1} << d;
  if (w.member_of_mask.size() != n_masks) return false;

  for (std::uint32_t i = 0; i < d; ++i) {
    if (w.atoms[i].empty()) return false;
    if (!w.atoms[i].disjoint_with(w.base)) return false;
    for (std::uint32_t j = i + 1; j < d; ++j) {
      if (!w.atoms[i].disjoint_with(w.atoms[j])) return false;
    }
    if (i + 1 < d && w.atoms[i].smallest_element() >= w.atoms[i + 1].smallest_element())
      return false;
  }

  std::vector<FiniteSet> sets(n_masks);
  std::vector<std::uint32_t> seen(w.member_of_mask);
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  for (std::uint32_t mask = 0; mask < n_masks; ++mask) {
    const std::uint32_t idx = w.member_of_mask[mask];
    if (idx >= f.size()) return false;
    sets[mask] = w.set_for_mask(mask);
    if (!(f.member(idx) == sets[mask])) return false;
  }
  for (std::uint32_t i = 0; i < n_masks; ++i) {
    for (std::uint32_t j = 0; j < n_masks; ++j) {
      if (!((sets[i] | sets[j]) == sets[i | j])) return false;
      if (!((sets[i] & sets[j]) == sets[i & j])) return false;
    }
  }
  return true;
}

std::uint64_t witness_count_bound(std::uint64_t m, std::uint32_t d) {
  return binomial(m, ceil_log2(d + 2));
}

DeterminingSet determining_subfamily(const BooleanAlgebraWitness& w) {
  const std::uint32_t k = ceil_log2(w.dimension + 2);
  DeterminingSet c;
  // C_j = A_0 ∪ ⋃ { A_i : bit j-1 of i is set }, writing atom indices in
  // binary; k digits suffice to tell any two of ∅, A_0-only and the d atom
  // classes apart.
  for (std::uint32_t j = 1; j <= k; ++j) {
    std::uint32_t mask = 0;
    for (std::uint32_t i = 1; i <= w.dimension; ++i) {
      if ((i >> (j - 1)) & 1) mask |= std::uint32_t{1} << (i - 1);
    }
    c.member_indices.push_back(w.member_of_mask[mask]);
    c.sets.push_back(w.set_for_mask(mask));
  }
  return c;
}

bool generates(std::span<const FiniteSet> c, const BooleanAlgebraWitness& w) {
  if (c.empty()) throw Error("generating set must be nonempty");
  std::unordered_set<FiniteSet, FiniteSetHash> closure(c.begin(), c.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<FiniteSet> snapshot(closure.begin(), closure.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = 0; j < snapshot.size(); ++j) {
        for (const FiniteSet& s : {snapshot[i] | snapshot[j], snapshot[i] & snapshot[j],
                                   snapshot[i] - snapshot[j]}) {
          if (closure.insert(s).second) grew = true;
        }
      }
    }
  }
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << w.dimension); ++mask) {
    if (!closure.contains(w.set_for_mask(mask))) return false;
  }
  return true;
}

std::uint32_t min_generating_size(const BooleanAlgebraWitness& w) {
  const std::uint32_t regions = w.dimension + (w.base.empty() ? 0 : 1);
  return ceil_log2(regions + 1);
}

}  // namespace setfam
