#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace setfam {

// A finite set over ground elements 1..n, stored as a packed bit vector
// (element e lives at bit position e-1).  The word count is fixed by the
// ambient universe; all binary operations require operands of equal width.
// There is deliberately no complement operation: every expression the
// library evaluates is built from union, intersection and difference.
class FiniteSet {
 public:
  FiniteSet() = default;
  explicit FiniteSet(std::size_t word_count) : words_(word_count, 0) {}

  static std::size_t words_for_universe(std::uint32_t n) { return (n + 63) / 64; }

  // Elements are 1-based, matching the paper-style ground set [n].
  static FiniteSet from_elements(std::uint32_t universe, std::span<const std::uint32_t> elements);

  bool contains(std::uint32_t element) const {
    const std::uint32_t pos = element - 1;
    return (words_[pos >> 6] >> (pos & 63)) & 1;
  }
  void insert(std::uint32_t element) {
    const std::uint32_t pos = element - 1;
    words_[pos >> 6] |= std::uint64_t{1} << (pos & 63);
  }

  std::size_t count() const;
  bool empty() const;
  // 1-based elements in increasing order.
  std::vector<std::uint32_t> elements() const;
  // Smallest element, or 0 for the empty set.
  std::uint32_t smallest_element() const;

  FiniteSet operator|(const FiniteSet& o) const;
  FiniteSet operator&(const FiniteSet& o) const;
  FiniteSet operator-(const FiniteSet& o) const;  // set difference
  FiniteSet& operator|=(const FiniteSet& o);

  bool subset_of(const FiniteSet& o) const;
  bool proper_subset_of(const FiniteSet& o) const { return subset_of(o) && *this != o; }
  bool disjoint_with(const FiniteSet& o) const;

  bool operator==(const FiniteSet& o) const = default;
  auto operator<=>(const FiniteSet& o) const = default;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }
  std::size_t word_count() const { return words_.size(); }

 private:
  std::vector<std::uint64_t> words_;
};

struct FiniteSetHash {
  std::size_t operator()(const FiniteSet& s) const;
};

std::uint64_t hash_words(std::span<const std::uint64_t> words);

}  // namespace setfam
