#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "setfam/finite_set.hpp"
#include "setfam/index_mask.hpp"

namespace setfam {

// A finite family of distinct subsets of [n], stored as packed rows of
// 64-bit words (members are rows, words of one member are contiguous).
// Member order is the construction order and is part of the value: indices
// returned by queries refer to it.
class SetFamily {
 public:
  SetFamily(std::uint32_t universe_size, std::vector<FiniteSet> members);

  static SetFamily from_element_lists(std::uint32_t universe_size,
                                      const std::vector<std::vector<std::uint32_t>>& lists);

  std::uint32_t universe_size() const { return n_; }
  std::size_t size() const { return m_; }
  std::size_t words_per_set() const { return w_; }

  const std::uint64_t* packed() const { return packed_.data(); }
  std::span<const std::uint64_t> member_words(std::size_t i) const {
    return {packed_.data() + i * w_, w_};
  }
  FiniteSet member(std::size_t i) const;
  std::size_t member_size(std::size_t i) const;

  // Index of the member equal to the given word image, if present.
  std::optional<std::uint32_t> find(std::span<const std::uint64_t> words) const;
  std::optional<std::uint32_t> find(const FiniteSet& s) const;
  bool contains(const FiniteSet& s) const { return find(s).has_value(); }

  // New family over the same universe keeping the listed members in the
  // listed order. Indices must be in range; repeats are rejected.
  SetFamily subfamily(std::span<const std::uint32_t> indices) const;

  IndexMask full_mask() const { return IndexMask(m_, true); }

 private:
  std::uint32_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t w_ = 1;
  std::vector<std::uint64_t> packed_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> by_hash_;
};

// Chain ranks. rank[i] is the length of the longest chain in the family
// ending at member i, so ranks are 1-based and every level is an antichain.
// predecessor[i] is the smallest index of a proper subset of member i whose
// rank is rank[i]-1, or -1 when rank[i] == 1.
struct RankTable {
  std::vector<std::uint32_t> rank;
  std::vector<std::vector<std::uint32_t>> levels;
  std::uint32_t max_rank = 0;
  std::vector<std::int64_t> predecessor;
};

RankTable rank_partition(const SetFamily& f);

bool is_antichain(const SetFamily& f, std::span<const std::uint32_t> indices);

// Distinct members i_1 < ... < i_a whose union equals member rhs, with rhs
// outside the left side.
struct UnionViolation {
  std::vector<std::uint32_t> lhs;
  std::uint32_t rhs = 0;
};

// Distinct members split into an a-part and a b-part with equal unions,
// all a+b indices pairwise distinct, each side listed in increasing order.
struct ABUnionViolation {
  std::vector<std::uint32_t> lhs;
  std::vector<std::uint32_t> rhs;
};

// Enumerates violations restricted to `candidates` in lexicographic order of
// the left index tuple (then of the right tuple where applicable). The
// visitor returns false to stop early; the function returns false exactly
// when a visitor did so.
bool scan_union_violations(const SetFamily& f, const IndexMask& candidates, std::uint32_t a,
                           const std::function<bool(std::span<const std::uint32_t>, std::uint32_t)>& visit);
bool scan_ab_union_violations(
    const SetFamily& f, const IndexMask& candidates, std::uint32_t a, std::uint32_t b,
    const std::function<bool(std::span<const std::uint32_t>, std::span<const std::uint32_t>)>& visit);

std::optional<UnionViolation> find_a_union_violation(const SetFamily& f, const IndexMask& candidates,
                                                     std::uint32_t a);
std::optional<UnionViolation> find_a_union_violation(const SetFamily& f, std::uint32_t a);
bool is_a_union_free(const SetFamily& f, std::uint32_t a);

std::optional<ABUnionViolation> find_ab_union_violation(const SetFamily& f,
                                                        const IndexMask& candidates,
                                                        std::uint32_t a, std::uint32_t b);
std::optional<ABUnionViolation> find_ab_union_violation(const SetFamily& f, std::uint32_t a,
                                                        std::uint32_t b);
bool is_ab_union_free(const SetFamily& f, std::uint32_t a, std::uint32_t b);

std::uint64_t count_a_union_violations(const SetFamily& f, const IndexMask& candidates,
                                       std::uint32_t a);
std::uint64_t count_ab_union_violations(const SetFamily& f, const IndexMask& candidates,
                                        std::uint32_t a, std::uint32_t b);

}  // namespace setfam
