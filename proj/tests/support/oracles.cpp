#include "support/oracles.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>
#include <variant>

namespace testsupport {

using setfam::FiniteSet;
using setfam::SetFamily;

namespace {

// All size-r index combinations from [0, m), ascending; visitor returns
// false to stop.
template <typename F>
bool for_each_combination(std::uint32_t m, std::uint32_t r, F&& visit) {
  if (r > m) return true;
  std::vector<std::uint32_t> c(r);
  for (std::uint32_t i = 0; i < r; ++i) c[i] = i;
  while (true) {
    if (!visit(c)) return false;
    std::uint32_t i = r;
    while (i > 0 && c[i - 1] == m - r + i - 1) --i;
    if (i == 0) return true;
    ++c[i - 1];
    for (std::uint32_t j = i; j < r; ++j) c[j] = c[j - 1] + 1;
  }
}

FiniteSet member_set(const SetFamily& f, std::uint32_t i) {
  return f.member(i);
}

}  // namespace

bool naive_is_a_union_free(const SetFamily& f, std::uint32_t a) {
  const std::uint32_t m = static_cast<std::uint32_t>(f.size());
  bool free_so_far = for_each_combination(m, a, [&](const auto& combo) {
    FiniteSet u(FiniteSet::words_for_universe(f.universe_size()));
    for (std::uint32_t i : combo) u |= member_set(f, i);
    for (std::uint32_t j = 0; j < m; ++j) {
      if (std::find(combo.begin(), combo.end(), j) != combo.end()) continue;
      if (member_set(f, j) == u) return false;
    }
    return true;
  });
  return free_so_far;
}

bool naive_is_ab_union_free(const SetFamily& f, std::uint32_t a,
                            std::uint32_t b) {
  const std::uint32_t m = static_cast<std::uint32_t>(f.size());
  bool free_so_far = for_each_combination(m, a, [&](const auto& lhs) {
    FiniteSet lu(FiniteSet::words_for_universe(f.universe_size()));
    for (std::uint32_t i : lhs) lu |= member_set(f, i);
    return for_each_combination(m, b, [&](const auto& rhs) {
      for (std::uint32_t j : rhs)
        if (std::find(lhs.begin(), lhs.end(), j) != lhs.end()) return true;
      FiniteSet ru(FiniteSet::words_for_universe(f.universe_size()));
      for (std::uint32_t j : rhs) ru |= member_set(f, j);
      return lu != ru;
    });
  });
  return free_so_far;
}

bool forms_bd(const std::vector<FiniteSet>& sets, std::uint32_t d) {
  const std::uint32_t full = 1u << d;
  if (sets.size() != full) return false;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (sets[i] == sets[j]) return false;

  // The index-law minimum and maximum are forced: position 0 holds the
  // intersection of everything, position full-1 the union.
  FiniteSet inter = sets[0];
  FiniteSet uni = sets[0];
  for (const FiniteSet& s : sets) {
    inter = inter & s;
    uni |= s;
  }
  std::int32_t lo = -1;
  std::int32_t hi = -1;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i] == inter) lo = static_cast<std::int32_t>(i);
    if (sets[i] == uni) hi = static_cast<std::int32_t>(i);
  }
  if (lo < 0 || hi < 0) return false;
  if (full == 2) return true;  // distinct, comparable pair

  std::vector<std::uint32_t> middle;
  for (std::uint32_t i = 0; i < full; ++i)
    if (static_cast<std::int32_t>(i) != lo && static_cast<std::int32_t>(i) != hi)
      middle.push_back(i);

  std::vector<std::uint32_t> at(full);  // at[mask] = index into sets
  at[0] = static_cast<std::uint32_t>(lo);
  at[full - 1] = static_cast<std::uint32_t>(hi);
  do {
    for (std::uint32_t p = 0; p + 2 < full; ++p) at[p + 1] = middle[p];
    bool ok = true;
    for (std::uint32_t i = 0; i < full && ok; ++i) {
      for (std::uint32_t j = i + 1; j < full && ok; ++j) {
        if ((sets[at[i]] | sets[at[j]]) != sets[at[i | j]]) ok = false;
        else if ((sets[at[i]] & sets[at[j]]) != sets[at[i & j]]) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(middle.begin(), middle.end()));
  return false;
}

namespace {

// Candidate combos must contain their own intersection and union; that
// filter removes nearly everything before the permutation scan runs.
template <typename F>
void scan_bd(const SetFamily& f, std::uint32_t d, F&& on_witness) {
  const std::uint32_t m = static_cast<std::uint32_t>(f.size());
  const std::uint32_t full = 1u << d;
  for_each_combination(m, full, [&](const auto& combo) {
    std::vector<FiniteSet> sets;
    sets.reserve(full);
    for (std::uint32_t i : combo) sets.push_back(member_set(f, i));
    FiniteSet inter = sets[0];
    FiniteSet uni = sets[0];
    for (const FiniteSet& s : sets) {
      inter = inter & s;
      uni |= s;
    }
    bool has_lo = false;
    bool has_hi = false;
    for (const FiniteSet& s : sets) {
      if (s == inter) has_lo = true;
      if (s == uni) has_hi = true;
    }
    if (!has_lo || !has_hi) return true;
    if (forms_bd(sets, d)) return on_witness();
    return true;
  });
}

}  // namespace

bool naive_is_bd_free(const SetFamily& f, std::uint32_t d) {
  bool found = false;
  scan_bd(f, d, [&] {
    found = true;
    return false;
  });
  return !found;
}

std::uint64_t naive_count_bd_witnesses(const SetFamily& f, std::uint32_t d) {
  std::uint64_t count = 0;
  scan_bd(f, d, [&] {
    ++count;
    return true;
  });
  return count;
}

std::uint64_t power_set_bd_count(std::uint32_t n, std::uint32_t d) {
  auto ipow = [](std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
  };
  auto binom = [](std::uint64_t nn, std::uint64_t kk) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= kk; ++i) r = r * (nn - kk + i) / i;
    return r;
  };
  std::int64_t total = 0;
  for (std::uint32_t i = 0; i <= d; ++i) {
    std::int64_t term = static_cast<std::int64_t>(
        binom(d, i) * ipow(d + 2 - i, n));
    total += (i % 2 == 0) ? term : -term;
  }
  std::uint64_t fact = 1;
  for (std::uint32_t i = 2; i <= d; ++i) fact *= i;
  return static_cast<std::uint64_t>(total) / fact;
}

bool naive_holds(const SetFamily& f, const setfam::Property& p) {
  return std::visit(
      [&](const auto& prop) {
        using T = std::decay_t<decltype(prop)>;
        if constexpr (std::is_same_v<T, setfam::BdFree>)
          return naive_is_bd_free(f, prop.d);
        else if constexpr (std::is_same_v<T, setfam::AUnionFree>)
          return naive_is_a_union_free(f, prop.a);
        else
          return naive_is_ab_union_free(f, prop.a, prop.b);
      },
      p);
}

std::uint32_t brute_max_subfamily(const SetFamily& f,
                                  const setfam::Property& p) {
  const std::uint32_t m = static_cast<std::uint32_t>(f.size());
  std::uint32_t best = 0;
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    const std::uint32_t size = static_cast<std::uint32_t>(std::popcount(mask));
    if (size <= best) continue;
    std::vector<std::uint32_t> idx;
    for (std::uint32_t i = 0; i < m; ++i)
      if (mask & (1ull << i)) idx.push_back(i);
    if (naive_holds(f.subfamily(idx), p)) best = size;
  }
  return best;
}

std::vector<std::uint32_t> naive_ranks(const SetFamily& f) {
  const std::uint32_t m = static_cast<std::uint32_t>(f.size());
  std::vector<std::uint32_t> order(m);
  for (std::uint32_t i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return f.member_size(a) < f.member_size(b);
  });
  std::vector<std::uint32_t> rank(m, 1);
  for (std::uint32_t oi = 0; oi < m; ++oi) {
    const std::uint32_t i = order[oi];
    for (std::uint32_t j = 0; j < m; ++j) {
      if (member_set(f, j).proper_subset_of(member_set(f, i)))
        rank[i] = std::max(rank[i], rank[j] + 1);
    }
  }
  return rank;
}

SetFamily random_family(std::mt19937_64& rng, std::uint32_t n,
                        std::uint32_t m) {
  if (n < 30 && m > (1u << n))
    throw std::invalid_argument("more members than distinct subsets");
  std::unordered_set<std::uint64_t> seen;
  std::vector<FiniteSet> members;
  while (members.size() < m) {
    const std::uint64_t mask = rng() & ((1ull << n) - 1);
    if (!seen.insert(mask).second) continue;
    std::vector<std::uint32_t> elems;
    for (std::uint32_t e = 1; e <= n; ++e)
      if (mask & (1ull << (e - 1))) elems.push_back(e);
    members.push_back(FiniteSet::from_elements(n, elems));
  }
  return SetFamily(n, members);
}

}  // namespace testsupport
