#include "setfam/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <unordered_set>

#include "setfam/errors.hpp"
#include "setfam/numeric.hpp"

namespace setfam {

namespace {

using Clock = std::chrono::steady_clock;

struct Search {
  const SetFamily& f;
  const Property& p;
  const SearchConfig& cfg;

  std::vector<std::uint32_t> incumbent;
  std::uint64_t nodes = 0;
  bool exhausted = true;
  Clock::time_point deadline{};
  bool has_deadline = false;

  bool out_of_budget() {
    if (nodes >= cfg.node_limit) return true;
    if (has_deadline && (nodes & 255) == 0 && Clock::now() > deadline) return true;
    return false;
  }

  void expand(IndexMask candidates, IndexMask required) {
    ++nodes;
    if (out_of_budget()) {
      exhausted = false;
      return;
    }
    if (candidates.count() <= incumbent.size()) return;

    const auto violation = find_violation(f, candidates, p);
    if (!violation) {
      incumbent = candidates.to_indices();
      return;
    }

    // Most-constrained first: participants in as many violations as
    // possible, ties to the lower index.
    std::vector<std::uint32_t> parts = *violation;
    const auto participation = violation_participation(f, candidates, p);
    std::stable_sort(parts.begin(), parts.end(), [&](std::uint32_t x, std::uint32_t y) {
      return participation[x] > participation[y];
    });

    // Child i deletes parts[i] and pins parts[0..i) as kept, which makes
    // the children cover disjoint solution sets whose union is this node's.
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const std::uint32_t v = parts[i];
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

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t h = 1469598103934665603ull) {
  const auto* b = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= b[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

OracleResult max_subfamily(const SetFamily& f, const Property& p, const SearchConfig& cfg) {
  Search s{f, p, cfg, {}, 0, true, {}, false};
  if (cfg.time_limit_ms > 0) {
    s.deadline = Clock::now() + std::chrono::milliseconds(cfg.time_limit_ms);
    s.has_deadline = true;
  }

  if (cfg.initial) {
    auto init = *cfg.initial;
    std::sort(init.begin(), init.end());
    init.erase(std::unique(init.begin(), init.end()), init.end());
    if (!init.empty() && init.back() >= f.size()) {
      throw Error("initial incumbent references member " + std::to_string(init.back()) +
                  " of a family with " + std::to_string(f.size()) + " members");
    }
    const IndexMask mask = IndexMask::from_indices(f.size(), init);
    if (!holds(f, mask, p)) {
      throw Error("initial incumbent violates the property");
    }
    s.incumbent = init;
  } else {
    // Greedy warm start in member order; every prefix is re-verified, so
    // the starting incumbent is always feasible.
    IndexMask selected(f.size());
    for (std::uint32_t i = 0; i < f.size(); ++i) {
      selected.set(i);
      if (!holds(f, selected, p)) selected.reset(i);
    }
    s.incumbent = selected.to_indices();
  }

  s.expand(f.full_mask(), IndexMask(f.size()));

  OracleResult r;
  r.optimum = static_cast<std::uint32_t>(s.incumbent.size());
  r.witness = std::move(s.incumbent);
  r.proven = s.exhausted;
  r.nodes = s.nodes;

  if (!holds(f, IndexMask::from_indices(f.size(), r.witness), p)) {
    throw InternalVerificationError("oracle witness fails the property predicate");
  }
  return r;
}

namespace {

// Canonical form of an m-subset of 2^[n]: the lexicographically smallest
// sorted mask list over all ground permutations.
struct Canonicalizer {
  std::uint32_t n;
  std::vector<std::vector<std::uint32_t>> perms;

  explicit Canonicalizer(std::uint32_t n_) : n(n_) {
    std::vector<std::uint32_t> perm(n);
    for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
    do {
      perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::uint32_t apply(const std::vector<std::uint32_t>& perm, std::uint32_t mask) const {
    std::uint32_t out = 0;
    for (std::uint32_t b = 0; b < n; ++b) {
      if ((mask >> b) & 1) out |= std::uint32_t{1} << perm[b];
    }
    return out;
  }

  std::vector<std::uint32_t> canonical(const std::vector<std::uint32_t>& masks) const {
    std::vector<std::uint32_t> best;
    std::vector<std::uint32_t> image(masks.size());
    for (const auto& perm : perms) {
      for (std::size_t i = 0; i < masks.size(); ++i) image[i] = apply(perm, masks[i]);
      std::sort(image.begin(), image.end());
      if (best.empty() || image < best) best = image;
    }
    return best;
  }
};

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    return fnv1a(v.data(), v.size() * sizeof(std::uint32_t));
  }
};

}  // namespace

MinFamiliesResult min_over_families(std::uint32_t m, std::uint32_t n, const Property& p,
                                    const SearchConfig& cfg, std::uint64_t budget) {
  if (n > 6) throw LimitExceededError("minimization universe limited to n <= 6");
  const std::uint64_t total = std::uint64_t{1} << n;
  if (m < 1 || m > total) throw Error("need 1 <= m <= 2^n");
  if (binomial(total, m) > budget) {
    throw LimitExceededError("C(2^" + std::to_string(n) + "," + std::to_string(m) + ") = " +
                             std::to_string(binomial(total, m)) + " exceeds budget " +
                             std::to_string(budget));
  }

  const Canonicalizer canon(n);
  std::unordered_set<std::vector<std::uint32_t>, VecHash> seen;

  MinFamiliesResult best;
  best.universe = n;
  bool have = false;

  std::vector<std::uint32_t> combo(m);
  for (std::uint32_t i = 0; i < m; ++i) combo[i] = i;
  while (true) {
    if (seen.insert(canon.canonical(combo)).second) {
      std::vector<std::vector<std::uint32_t>> lists;
      lists.reserve(m);
      for (std::uint32_t mask : combo) {
        std::vector<std::uint32_t> elems;
        for (std::uint32_t e = 1; e <= n; ++e) {
          if ((mask >> (e - 1)) & 1) elems.push_back(e);
        }
        lists.push_back(std::move(elems));
      }
      const SetFamily fam = SetFamily::from_element_lists(n, lists);
      const OracleResult r = max_subfamily(fam, p, cfg);
      ++best.families_examined;
      if (!r.proven) best.proven = false;
      if (!have || r.optimum < best.value) {
        best.value = r.optimum;
        best.worst_family = lists;
        have = true;
      }
    }
    // next m-combination of {0..2^n-1}
    std::size_t i = m;
    while (i > 0 && combo[i - 1] == total - m + i - 1) --i;
    if (i == 0) break;
    ++combo[i - 1];
    for (std::size_t j = i; j < m; ++j) combo[j] = combo[j - 1] + 1;
  }
  return best;
}

}  // namespace setfam
