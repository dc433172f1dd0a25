#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "setfam/family.hpp"

namespace setfam {

// A dimension-d Boolean subalgebra of a family: 2^d members B_I indexed by
// subsets I of [d] with B_I ∪ B_J = B_{I∪J} and B_I ∩ B_J = B_{I∩J}.
// Equivalently: a base A_0 (possibly empty) plus pairwise disjoint nonempty
// atoms A_1..A_d with B_I = A_0 ∪ ⋃_{i∈I} A_i.  Witnesses are canonical:
// atoms are sorted by smallest element, which collapses the d! labelings.
struct BooleanAlgebraWitness {
  std::uint32_t dimension = 0;
  FiniteSet base;
  std::vector<FiniteSet> atoms;  // A_1..A_d in canonical order
  // member_of_mask[I] is the family index of B_I, where bit i-1 of I means
  // atom i is included; size 2^dimension.
  std::vector<std::uint32_t> member_of_mask;

  FiniteSet set_for_mask(std::uint32_t mask) const;
};

struct EnumerationOptions {
  std::uint64_t limit = 1'000'000;
  // Strict reading: reject witnesses whose base A_0 is empty.
  bool require_nonempty_base = false;
};

struct EnumerationResult {
  std::vector<BooleanAlgebraWitness> witnesses;
  // False when the limit cut the enumeration short.
  bool complete = true;
};

// Visits every canonical witness lying inside `candidates` exactly once, in
// lexicographic order of the sorted singleton-member index tuple.  The
// visitor returns false to stop; the function returns true iff the space
// was exhausted.
bool for_each_boolean_algebra(const SetFamily& f, const IndexMask& candidates, std::uint32_t d,
                              const EnumerationOptions& opts,
                              const std::function<bool(const BooleanAlgebraWitness&)>& visit);

EnumerationResult enumerate_boolean_algebras(const SetFamily& f, std::uint32_t d,
                                             const EnumerationOptions& opts = {});

std::uint64_t count_boolean_algebras(const SetFamily& f, std::uint32_t d,
                                     bool require_nonempty_base = false);
std::uint64_t count_boolean_algebras(const SetFamily& f, const IndexMask& candidates,
                                     std::uint32_t d, bool require_nonempty_base = false);

std::optional<BooleanAlgebraWitness> find_boolean_algebra(const SetFamily& f,
                                                          const IndexMask& candidates,
                                                          std::uint32_t d);
bool is_bd_free(const SetFamily& f, std::uint32_t d);

// Full check of the index-map laws plus the atom decomposition; used as the
// soundness oracle for everything the enumerator emits.
bool verify_witness(const SetFamily& f, const BooleanAlgebraWitness& w);

// Corollary-style cap on the number of witnesses any m-member family can
// contain: C(m, ceil_log2(d+2)).
std::uint64_t witness_count_bound(std::uint64_t m, std::uint32_t d);

struct DeterminingSet {
  std::vector<std::uint32_t> member_indices;
  std::vector<FiniteSet> sets;
};

// The size-ceil_log2(d+2) determining subfamily: C_j collects A_0 plus the
// atoms whose index has bit j-1 set.
DeterminingSet determining_subfamily(const BooleanAlgebraWitness& w);

// True iff the closure of `c` under union, intersection and difference
// contains every member of the witness's algebra.  No complements.
bool generates(std::span<const FiniteSet> c, const BooleanAlgebraWitness& w);

// Exact minimum size of a generating subfamily.  Every closure set is a
// union of C-membership pattern classes, so the d atoms, plus the base when
// it is nonempty, need distinct nonzero patterns: 2^{|C|} - 1 >= d + 1 for
// a nonempty base, 2^{|C|} - 1 >= d otherwise.  Both bounds are attained.
std::uint32_t min_generating_size(const BooleanAlgebraWitness& w);

}  // namespace setfam
