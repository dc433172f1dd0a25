#include "setfam/constructions.hpp"

#include <string>

#include "setfam/errors.hpp"
#include "setfam/numeric.hpp"

namespace setfam {

namespace {

void check_universe(std::uint64_t n, std::uint32_t max_universe) {
  if (n > max_universe) {
    throw UniverseTooLargeError("construction needs " + std::to_string(n) +
                                " ground elements, limit is " + std::to_string(max_universe));
  }
}

}  // namespace

SetFamily chain_product(std::span<const std::uint32_t> chain_sizes, std::uint32_t max_universe) {
  if (chain_sizes.empty()) throw Error("chain product needs at least one chain");
  std::uint64_t n = 0;
  std::uint64_t m = 1;
  for (std::uint32_t s : chain_sizes) {
    if (s < 1) throw Error("chain sizes must be at least 1");
    n += s;
    m = checked_mul(m, s);
  }
  check_universe(n, max_universe);
  if (m > 1'000'000) {
    throw UniverseTooLargeError("chain product has " + std::to_string(m) +
                                " members, limit is 1000000");
  }

  const std::uint32_t universe = static_cast<std::uint32_t>(n);
  const std::size_t w = FiniteSet::words_for_universe(universe);
  const std::size_t d = chain_sizes.size();

  std::vector<std::uint32_t> offset(d, 0);
  for (std::size_t i = 1; i < d; ++i) offset[i] = offset[i - 1] + chain_sizes[i - 1];

  std::vector<FiniteSet> members;
  members.reserve(m);
  std::vector<std::uint32_t> j(d, 1);
  while (true) {
    FiniteSet s(w);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::uint32_t e = 1; e <= j[i]; ++e) s.insert(offset[i] + e);
    }
    members.push_back(std::move(s));
    std::size_t i = 0;
    while (i < d && j[i] == chain_sizes[i]) {
      j[i] = 1;
      ++i;
    }
    if (i == d) break;
    ++j[i];
  }
  return SetFamily(universe, std::move(members));
}

SetFamily erdos_shelah_family(std::uint32_t k) {
  if (k < 1) throw Error("k must be at least 1");
  const std::uint32_t sizes[2] = {k, k};
  return chain_product(sizes);
}

SetFamily bd_extremal_family(std::uint32_t k, std::uint32_t d, std::uint32_t max_universe) {
  if (k < 2 || d < 2) throw Error("extremal product needs k >= 2 and d >= 2");
  std::vector<std::uint32_t> sizes;
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    const std::uint64_t s = checked_pow(k, static_cast<std::uint32_t>(e));
    if (s > max_universe) {
      throw UniverseTooLargeError("chain " + std::to_string(i + 1) + " needs " +
                                  std::to_string(s) + " elements, limit is " +
                                  std::to_string(max_universe));
    }
    sizes.push_back(static_cast<std::uint32_t>(s));
    e *= 2;
  }
  return chain_product(sizes, max_universe);
}

SetFamily leveled_family(std::span<const std::uint32_t> level_sizes, std::uint32_t max_universe) {
  if (level_sizes.empty()) throw Error("leveled family needs at least one level");
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  for (std::uint32_t k : level_sizes) {
    if (k < 1) throw Error("level sizes must be at least 1");
    n += 2ull * k;
    m += checked_mul(k, k);
  }
  check_universe(n, max_universe);
  if (m > 1'000'000) {
    throw UniverseTooLargeError("leveled family has " + std::to_string(m) +
                                " members, limit is 1000000");
  }

  const std::uint32_t universe = static_cast<std::uint32_t>(n);
  const std::size_t w = FiniteSet::words_for_universe(universe);

  std::vector<FiniteSet> members;
  FiniteSet lower(w);  // all elements of completed levels
  std::uint32_t base = 0;
  for (std::uint32_t k : level_sizes) {
    // Level blocks: A-chain at base+1..base+k, B-chain right after.
    for (std::uint32_t j2 = 1; j2 <= k; ++j2) {
      for (std::uint32_t j1 = 1; j1 <= k; ++j1) {
        FiniteSet s = lower;
        for (std::uint32_t e = 1; e <= j1; ++e) s.insert(base + e);
        for (std::uint32_t e = 1; e <= j2; ++e) s.insert(base + k + e);
        members.push_back(std::move(s));
      }
    }
    for (std::uint32_t e = 1; e <= 2 * k; ++e) lower.insert(base + e);
    base += 2 * k;
  }
  return SetFamily(universe, std::move(members));
}

SetFamily leveled_family(std::uint32_t q, std::uint32_t k, std::uint32_t max_universe) {
  if (q < 1) throw Error("leveled family needs q >= 1");
  std::vector<std::uint32_t> sizes(q, k);
  return leveled_family(sizes, max_universe);
}

std::vector<std::uint32_t> geometric_level_sizes(std::uint32_t a, std::uint32_t k,
                                                 std::uint32_t q) {
  if (a < 4) {
    throw GeometricUndefinedError("geometric levels need a >= 4 (a = " + std::to_string(a) +
                                  " gives ratio denominator 0)");
  }
  if (k < 1 || q < 1) throw Error("geometric levels need k >= 1 and q >= 1");
  const std::uint64_t b = ceil_sqrt(std::uint64_t{a} + 1);
  std::vector<std::uint32_t> sizes;
  for (std::uint32_t l = 1; l <= q; ++l) {
    const std::uint32_t e = 2 * (l - 1);
    const std::uint64_t num = checked_mul(k, checked_pow(b - 1, e));
    const std::uint64_t den = checked_pow(b - 2, e);
    // Round half up, never below 1.
    std::uint64_t v = (2 * num + den) / (2 * den);
    if (v < 1) v = 1;
    if (v > (std::uint64_t{1} << 31)) throw UniverseTooLargeError("geometric level size overflow");
    sizes.push_back(static_cast<std::uint32_t>(v));
  }
  return sizes;
}

SetFamily geometric_leveled_family(std::uint32_t a, std::uint32_t k, std::uint32_t q,
                                   std::uint32_t max_universe) {
  const auto sizes = geometric_level_sizes(a, k, q);
  return leveled_family(sizes, max_universe);
}

SetFamily co_singleton_family(std::uint32_t m) {
  if (m < 2) throw Error("co-singleton family needs m >= 2");
  const std::size_t w = FiniteSet::words_for_universe(m);
  std::vector<FiniteSet> members;
  members.reserve(m);
  for (std::uint32_t excluded = m; excluded >= 1; --excluded) {
    FiniteSet s(w);
    for (std::uint32_t e = 1; e <= m; ++e) {
      if (e != excluded) s.insert(e);
    }
    members.push_back(std::move(s));
  }
  return SetFamily(m, std::move(members));
}

SetFamily power_set_family(std::uint32_t n, std::uint32_t max_universe) {
  if (n > 20) throw UniverseTooLargeError("power set of [n] limited to n <= 20");
  if (n > max_universe) {
    throw UniverseTooLargeError("universe " + std::to_string(n) + " exceeds limit " +
                                std::to_string(max_universe));
  }
  const std::size_t w = FiniteSet::words_for_universe(n);
  std::vector<FiniteSet> members;
  members.reserve(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    FiniteSet s(w);
    for (std::uint32_t e = 1; e <= n; ++e) {
      if ((mask >> (e - 1)) & 1) s.insert(e);
    }
    members.push_back(std::move(s));
  }
  return SetFamily(n, std::move(members));
}

}  // namespace setfam
