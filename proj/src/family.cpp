#include "setfam/family.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <string>

#include "setfam/errors.hpp"
#include "setfam/kernels.hpp"

namespace setfam {

SetFamily::SetFamily(std::uint32_t universe_size, std::vector<FiniteSet> members)
    : n_(universe_size),
      m_(members.size()),
      w_(FiniteSet::words_for_universe(universe_size)) {
  packed_.assign(m_ * w_, 0);
  const std::uint64_t last_mask =
      (n_ % 64 == 0) ? ~std::uint64_t{0} : ((~std::uint64_t{0}) >> (64 - n_ % 64));
  for (std::size_t i = 0; i < m_; ++i) {
    const FiniteSet& s = members[i];
    if (s.word_count() != w_) {
      throw Error("member " + std::to_string(i) + " has word width " +
                  std::to_string(s.word_count()) + ", universe needs " + std::to_string(w_));
    }
    if (w_ > 0 && (s.words()[w_ - 1] & ~last_mask) != 0) {
      const std::uint64_t stray = s.words()[w_ - 1] & ~last_mask;
      const long element = static_cast<long>((w_ - 1) * 64 + std::countr_zero(stray) + 1);
      throw ElementOutOfRangeError(i, element,
                                   "member " + std::to_string(i) + " contains element " +
                                       std::to_string(element) + " outside universe [1," +
                                       std::to_string(n_) + "]");
    }
    std::copy(s.words().begin(), s.words().end(), packed_.begin() + i * w_);
  }
  for (std::size_t i = 0; i < m_; ++i) {
    auto& bucket = by_hash_[hash_words(member_words(i))];
    for (std::uint32_t j : bucket) {
      if (std::equal(member_words(i).begin(), member_words(i).end(), member_words(j).begin())) {
        throw DuplicateSetError(j, i,
                                "members " + std::to_string(j) + " and " + std::to_string(i) +
                                    " are equal");
      }
    }
    bucket.push_back(static_cast<std::uint32_t>(i));
  }
}

SetFamily SetFamily::from_element_lists(std::uint32_t universe_size,
                                        const std::vector<std::vector<std::uint32_t>>& lists) {
  std::vector<FiniteSet> members;
  members.reserve(lists.size());
  for (std::size_t i = 0; i < lists.size(); ++i) {
    FiniteSet s(FiniteSet::words_for_universe(universe_size));
    for (std::uint32_t e : lists[i]) {
      if (e < 1 || e > universe_size) {
        throw ElementOutOfRangeError(i, static_cast<long>(e),
                                     "set " + std::to_string(i) + ": element " +
                                         std::to_string(e) + " outside universe [1," +
                                         std::to_string(universe_size) + "]");
      }
      s.insert(e);
    }
    members.push_back(std::move(s));
  }
  return SetFamily(universe_size, std::move(members));
}

FiniteSet SetFamily::member(std::size_t i) const {
  FiniteSet s(w_);
  std::copy(member_words(i).begin(), member_words(i).end(), s.words().begin());
  return s;
}

std::size_t SetFamily::member_size(std::size_t i) const {
  std::size_t c = 0;
  for (std::uint64_t w : member_words(i)) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::optional<std::uint32_t> SetFamily::find(std::span<const std::uint64_t> words) const {
  assert(words.size() == w_);
  auto it = by_hash_.find(hash_words(words));
  if (it == by_hash_.end()) return std::nullopt;
  for (std::uint32_t j : it->second) {
    if (std::equal(words.begin(), words.end(), member_words(j).begin())) return j;
  }
  return std::nullopt;
}

std::optional<std::uint32_t> SetFamily::find(const FiniteSet& s) const {
  if (s.word_count() != w_) return std::nullopt;
  return find(s.words());
}

SetFamily SetFamily::subfamily(std::span<const std::uint32_t> indices) const {
  std::vector<FiniteSet> members;
  members.reserve(indices.size());
  for (std::uint32_t i : indices) {
    if (i >= m_) {
      throw Error("subfamily index " + std::to_string(i) + " out of range, family has " +
                  std::to_string(m_) + " members");
    }
    members.push_back(member(i));
  }
  return SetFamily(n_, std::move(members));
}

RankTable rank_partition(const SetFamily& f) {
  const std::size_t m = f.size();
  RankTable t;
  t.rank.assign(m, 0);
  t.predecessor.assign(m, -1);

  std::vector<std::uint32_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    const std::size_t cx = f.member_size(x), cy = f.member_size(y);
    return cx != cy ? cx < cy : x < y;
  });

  const auto& k = kernels::active();
  std::vector<std::uint64_t> bits(kernels::mask_words(m));
  // A proper subset has strictly fewer elements, so processing members in
  // size order makes every predecessor rank final before it is read.
  for (std::uint32_t i : order) {
    k.subset_mask(f.packed(), m, f.words_per_set(), f.member_words(i).data(), bits.data());
    std::uint32_t best = 0;
    std::int64_t pred = -1;
    for (std::size_t wk = 0; wk < bits.size(); ++wk) {
      std::uint64_t wv = bits[wk];
      while (wv) {
        const std::uint32_t j = static_cast<std::uint32_t>(wk * 64 + std::countr_zero(wv));
        wv &= wv - 1;
        if (j == i) continue;
        if (t.rank[j] > best) {
          best = t.rank[j];
          pred = j;
        }
      }
    }
    t.rank[i] = best + 1;
    t.predecessor[i] = pred;
    t.max_rank = std::max(t.max_rank, t.rank[i]);
  }

  t.levels.assign(t.max_rank, {});
  for (std::uint32_t i = 0; i < m; ++i) t.levels[t.rank[i] - 1].push_back(i);
  return t;
}

bool is_antichain(const SetFamily& f, std::span<const std::uint32_t> indices) {
  for (std::size_t x = 0; x < indices.size(); ++x) {
    const FiniteSet a = f.member(indices[x]);
    for (std::size_t y = 0; y < indices.size(); ++y) {
      if (x == y) continue;
      if (a.proper_subset_of(f.member(indices[y]))) return false;
    }
  }
  return true;
}

namespace {

bool mask_has_bit_outside(const std::vector<std::uint64_t>& bits,
                          std::span<const std::uint32_t> excluded) {
  // excluded is tiny (at most the arity of the scan), so clear and restore
  // on a copy-free path is not worth it; copy the handful of words instead.
  std::vector<std::uint64_t> tmp(bits);
  for (std::uint32_t e : excluded) tmp[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
  for (std::uint64_t w : tmp) {
    if (w) return true;
  }
  return false;
}

struct UnionScan {
  const SetFamily& f;
  const IndexMask& candidates;
  std::uint32_t a;
  const std::function<bool(std::span<const std::uint32_t>, std::uint32_t)>& visit;

  std::vector<std::uint32_t> cand;
  std::vector<std::uint32_t> chosen;
  std::vector<std::uint64_t> unions;  // level t at [t*w, (t+1)*w)
  std::vector<std::uint64_t> sup_bits;
  bool stopped = false;

  bool run() {
    cand = candidates.to_indices();
    if (a == 0 || cand.size() < static_cast<std::size_t>(a) + 1) return true;
    const std::size_t w = f.words_per_set();
    unions.assign((static_cast<std::size_t>(a) + 1) * w, 0);
    sup_bits.assign(kernels::mask_words(f.size()), 0);
    chosen.clear();
    descend(0);
    return !stopped;
  }

  void descend(std::size_t start) {
    const std::size_t w = f.words_per_set();
    const std::size_t depth = chosen.size();
    const std::uint64_t* base = unions.data() + depth * w;
    std::uint64_t* next = unions.data() + (depth + 1) * w;
    for (std::size_t p = start; p < cand.size() && !stopped; ++p) {
      if (cand.size() - p < a - depth) break;
      const std::uint32_t idx = cand[p];
      const std::uint64_t* row = f.packed() + static_cast<std::size_t>(idx) * w;
      for (std::size_t kk = 0; kk < w; ++kk) next[kk] = base[kk] | row[kk];
      chosen.push_back(idx);
      if (chosen.size() == a) {
        if (auto r = f.find({next, w}); r && candidates.test(*r) &&
                                        std::find(chosen.begin(), chosen.end(), *r) == chosen.end()) {
          if (!visit(chosen, *r)) stopped = true;
        }
      } else {
        // The final union contains this partial one, and it must be a
        // member of the candidate set; branches with no such superset
        // beyond the chosen rows are dead.
        kernels::active().superset_mask(f.packed(), f.size(), w, next, sup_bits.data());
        for (std::size_t kk = 0; kk < sup_bits.size(); ++kk) sup_bits[kk] &= candidates.data()[kk];
        if (mask_has_bit_outside(sup_bits, chosen)) descend(p + 1);
      }
      chosen.pop_back();
    }
  }
};

struct ABUnionScan {
  const SetFamily& f;
  const IndexMask& candidates;
  std::uint32_t a, b;
  const std::function<bool(std::span<const std::uint32_t>, std::span<const std::uint32_t>)>& visit;

  std::vector<std::uint32_t> cand;
  std::vector<std::uint32_t> lhs, rhs;
  std::vector<std::uint64_t> unions;
  bool stopped = false;

  bool run() {
    cand = candidates.to_indices();
    if (a == 0 || b == 0 || cand.size() < static_cast<std::size_t>(a) + b) return true;
    const std::size_t w = f.words_per_set();
    unions.assign((static_cast<std::size_t>(a) + 1) * w, 0);
    lhs.clear();
    left(0);
    return !stopped;
  }

  void left(std::size_t start) {
    const std::size_t w = f.words_per_set();
    const std::size_t depth = lhs.size();
    const std::uint64_t* base = unions.data() + depth * w;
    std::uint64_t* next = unions.data() + (depth + 1) * w;
    for (std::size_t p = start; p < cand.size() && !stopped; ++p) {
      if (cand.size() - p < a - depth) break;
      const std::uint32_t idx = cand[p];
      const std::uint64_t* row = f.packed() + static_cast<std::size_t>(idx) * w;
      for (std::size_t kk = 0; kk < w; ++kk) next[kk] = base[kk] | row[kk];
      lhs.push_back(idx);
      if (lhs.size() == a) {
        right_side({next, w});
      } else {
        left(p + 1);
      }
      lhs.pop_back();
    }
  }

  void right_side(std::span<const std::uint64_t> target) {
    const std::size_t w = f.words_per_set();
    std::vector<std::uint64_t> bits(kernels::mask_words(f.size()));
    kernels::active().subset_mask(f.packed(), f.size(), w, target.data(), bits.data());
    for (std::size_t kk = 0; kk < bits.size(); ++kk) bits[kk] &= candidates.data()[kk];
    for (std::uint32_t e : lhs) bits[e >> 6] &= ~(std::uint64_t{1} << (e & 63));

    std::vector<std::uint32_t> pool;
    for (std::size_t kk = 0; kk < bits.size(); ++kk) {
      std::uint64_t wv = bits[kk];
      while (wv) {
        pool.push_back(static_cast<std::uint32_t>(kk * 64 + std::countr_zero(wv)));
        wv &= wv - 1;
      }
    }
    if (pool.size() < b) return;

    // suffix_union[p] covers rows pool[p..); used to cut branches that can
    // no longer reach the target union.
    std::vector<std::uint64_t> suffix((pool.size() + 1) * w, 0);
    for (std::size_t p = pool.size(); p-- > 0;) {
      const std::uint64_t* row = f.packed() + static_cast<std::size_t>(pool[p]) * w;
      for (std::size_t kk = 0; kk < w; ++kk)
        suffix[p * w + kk] = suffix[(p + 1) * w + kk] | row[kk];
    }

    std::vector<std::uint64_t> cur((static_cast<std::size_t>(b) + 1) * w, 0);
    rhs.clear();
    right(pool, suffix, cur, target, 0);
  }

  void right(const std::vector<std::uint32_t>& pool, const std::vector<std::uint64_t>& suffix,
             std::vector<std::uint64_t>& cur, std::span<const std::uint64_t> target,
             std::size_t start) {
    const std::size_t w = f.words_per_set();
    const std::size_t depth = rhs.size();
    const std::uint64_t* base = cur.data() + depth * w;

    bool reachable = true;
    for (std::size_t kk = 0; kk < w; ++kk) {
      if ((base[kk] | suffix[start * w + kk]) != target[kk]) {
        reachable = false;
        break;
      }
    }
    if (!reachable) return;

    for (std::size_t p = start; p < pool.size() && !stopped; ++p) {
      if (pool.size() - p < b - depth) break;
      const std::uint32_t idx = pool[p];
      // When both sides have the same arity each unordered pair shows up
      // twice; keep the copy whose smaller minimum is on the left.
      if (a == b && depth == 0 && idx < lhs[0]) continue;
      const std::uint64_t* row = f.packed() + static_cast<std::size_t>(idx) * w;
      std::uint64_t* next = cur.data() + (depth + 1) * w;
      for (std::size_t kk = 0; kk < w; ++kk) next[kk] = base[kk] | row[kk];
      rhs.push_back(idx);
      if (rhs.size() == b) {
        if (std::equal(next, next + w, target.begin())) {
          if (!visit(lhs, rhs)) stopped = true;
        }
      } else {
        right(pool, suffix, cur, target, p + 1);
      }
      rhs.pop_back();
    }
  }
};

}  // namespace

bool scan_union_violations(
    const SetFamily& f, const IndexMask& candidates, std::uint32_t a,
    const std::function<bool(std::span<const std::uint32_t>, std::uint32_t)>& visit) {
  UnionScan scan{f, candidates, a, visit, {}, {}, {}, {}, false};
  return scan.run();
}

bool scan_ab_union_violations(
    const SetFamily& f, const IndexMask& candidates, std::uint32_t a, std::uint32_t b,
    const std::function<bool(std::span<const std::uint32_t>, std::span<const std::uint32_t>)>&
        visit) {
  ABUnionScan scan{f, candidates, a, b, visit, {}, {}, {}, {}, false};
  return scan.run();
}

std::optional<UnionViolation> find_a_union_violation(const SetFamily& f,
                                                     const IndexMask& candidates, std::uint32_t a) {
  if (a == 0) throw Error("union arity must be at least 1");
  std::optional<UnionViolation> found;
  scan_union_violations(f, candidates, a,
                        [&](std::span<const std::uint32_t> lhs, std::uint32_t rhs) {
                          found = UnionViolation{{lhs.begin(), lhs.end()}, rhs};
                          return false;
                        });
  return found;
}

std::optional<UnionViolation> find_a_union_violation(const SetFamily& f, std::uint32_t a) {
  return find_a_union_violation(f, f.full_mask(), a);
}

bool is_a_union_free(const SetFamily& f, std::uint32_t a) {
  return !find_a_union_violation(f, a).has_value();
}

std::optional<ABUnionViolation> find_ab_union_violation(const SetFamily& f,
                                                        const IndexMask& candidates,
                                                        std::uint32_t a, std::uint32_t b) {
  if (a == 0 || b == 0) throw Error("union arities must be at least 1");
  std::optional<ABUnionViolation> found;
  scan_ab_union_violations(f, candidates, a, b,
                           [&](std::span<const std::uint32_t> lhs,
                               std::span<const std::uint32_t> rhs) {
                             found = ABUnionViolation{{lhs.begin(), lhs.end()},
                                                      {rhs.begin(), rhs.end()}};
                             return false;
                           });
  return found;
}

std::optional<ABUnionViolation> find_ab_union_violation(const SetFamily& f, std::uint32_t a,
                                                        std::uint32_t b) {
  return find_ab_union_violation(f, f.full_mask(), a, b);
}

bool is_ab_union_free(const SetFamily& f, std::uint32_t a, std::uint32_t b) {
  return !find_ab_union_violation(f, a, b).has_value();
}

std::uint64_t count_a_union_violations(const SetFamily& f, const IndexMask& candidates,
                                       std::uint32_t a) {
  if (a == 0) throw Error("union arity must be at least 1");
  std::uint64_t n = 0;
  scan_union_violations(f, candidates, a, [&](std::span<const std::uint32_t>, std::uint32_t) {
    ++n;
    return true;
  });
  return n;
}

std::uint64_t count_ab_union_violations(const SetFamily& f, const IndexMask& candidates,
                                        std::uint32_t a, std::uint32_t b) {
  if (a == 0 || b == 0) throw Error("union arities must be at least 1");
  std::uint64_t n = 0;
  scan_ab_union_violations(
      f, candidates, a, b,
      [&](std::span<const std::uint32_t>, std::span<const std::uint32_t>) {
        ++n;
        return true;
      });
  return n;
}

}  // namespace setfam
