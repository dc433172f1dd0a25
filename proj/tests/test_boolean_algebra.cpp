#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "setfam/boolean_algebra.hpp"
#include "setfam/constructions.hpp"
#include "setfam/numeric.hpp"
#include "support/oracles.hpp"

using namespace setfam;

namespace {

IndexMask all_of(const SetFamily& f) {
  IndexMask m(f.size());
  for (std::uint32_t i = 0; i < f.size(); ++i) m.set(i);
  return m;
}

}  // namespace

TEST_CASE("power set counts match the inclusion-exclusion formula") {
  struct Row {
    std::uint32_t n, d;
    std::uint64_t expect;
  };
  for (Row r : {Row{2, 2, 1}, Row{3, 2, 9}, Row{4, 2, 55}, Row{5, 2, 285},
                Row{4, 3, 14}, Row{2, 1, 5}, Row{3, 1, 19}}) {
    SetFamily f = power_set_family(r.n);
    CHECK(testsupport::power_set_bd_count(r.n, r.d) == r.expect);
    CHECK(count_boolean_algebras(f, r.d) == r.expect);
  }
}

TEST_CASE("enumeration agrees with the permutation oracle") {
  SetFamily f = power_set_family(4);
  CHECK(count_boolean_algebras(f, 2) == testsupport::naive_count_bd_witnesses(f, 2));
  CHECK(count_boolean_algebras(f, 3) == testsupport::naive_count_bd_witnesses(f, 3));

  std::mt19937_64 rng(0x626101);
  for (int trial = 0; trial < 30; ++trial) {
    SetFamily g = testsupport::random_family(rng, 4, 4 + rng() % 9);
    CHECK(count_boolean_algebras(g, 2) == testsupport::naive_count_bd_witnesses(g, 2));
    CHECK(is_bd_free(g, 2) == testsupport::naive_is_bd_free(g, 2));
  }
}

TEST_CASE("every emitted witness passes the full law check") {
  for (std::uint32_t d : {1u, 2u, 3u}) {
    SetFamily f = power_set_family(4);
    EnumerationResult r = enumerate_boolean_algebras(f, d);
    REQUIRE(r.complete);
    std::set<std::vector<std::uint32_t>> seen;
    for (const auto& w : r.witnesses) {
      CHECK(verify_witness(f, w));
      CHECK(w.dimension == d);
      // The same algebra must not be emitted twice: the sorted member
      // index tuple identifies it.
      std::vector<std::uint32_t> key(w.member_of_mask);
      std::sort(key.begin(), key.end());
      CHECK(seen.insert(key).second);
      // Canonical atom order, disjoint and nonempty atoms, base disjoint
      // from every atom.
      for (std::size_t i = 0; i < w.atoms.size(); ++i) {
        CHECK_FALSE(w.atoms[i].empty());
        CHECK(w.atoms[i].disjoint_with(w.base));
        for (std::size_t j = i + 1; j < w.atoms.size(); ++j) {
          CHECK(w.atoms[i].disjoint_with(w.atoms[j]));
          CHECK(w.atoms[i].smallest_element() < w.atoms[j].smallest_element());
        }
      }
      for (std::uint32_t mask = 0; mask < (1u << d); ++mask)
        CHECK(f.member(w.member_of_mask[mask]) == w.set_for_mask(mask));
    }
  }
}

TEST_CASE("tampered witnesses fail verification") {
  SetFamily f = power_set_family(3);
  auto w = find_boolean_algebra(f, all_of(f), 2);
  REQUIRE(w.has_value());
  CHECK(verify_witness(f, *w));
  BooleanAlgebraWitness bad = *w;
  std::swap(bad.member_of_mask[1], bad.member_of_mask[2]);
  CHECK_FALSE(verify_witness(f, bad));
  BooleanAlgebraWitness bad2 = *w;
  bad2.member_of_mask[3] = bad2.member_of_mask[0];
  CHECK_FALSE(verify_witness(f, bad2));
}

TEST_CASE("enumeration limit truncates and reports incompleteness") {
  SetFamily f = power_set_family(3);
  EnumerationOptions opts;
  opts.limit = 3;
  EnumerationResult r = enumerate_boolean_algebras(f, 2, opts);
  CHECK(r.witnesses.size() == 3);
  CHECK_FALSE(r.complete);
}

TEST_CASE("strict base mode keeps exactly the nonempty-base witnesses") {
  SetFamily f = power_set_family(3);
  // Base, two atoms, all nonempty and disjoint inside [3]: one element
  // each, and only the base choice is free once atoms are canonical.
  CHECK(count_boolean_algebras(f, 2, true) == 3);
  EnumerationOptions opts;
  opts.require_nonempty_base = true;
  for (const auto& w : enumerate_boolean_algebras(f, 2, opts).witnesses)
    CHECK_FALSE(w.base.empty());
}

TEST_CASE("candidate restriction bounds the witness support") {
  SetFamily f = power_set_family(3);
  IndexMask some(f.size());
  // Subsets of {1,2} only: masks 0..3 under the power set's mask order.
  for (std::uint32_t i = 0; i < 4; ++i) some.set(i);
  CHECK(count_boolean_algebras(f, some, 2) == 1);
  auto w = find_boolean_algebra(f, some, 2);
  REQUIRE(w.has_value());
  for (std::uint32_t idx : w->member_of_mask) CHECK(some.test(idx));
}

TEST_CASE("witness count never beats the combination bound") {
  CHECK(witness_count_bound(10, 2) == binomial(10, 2));
  CHECK(witness_count_bound(10, 3) == binomial(10, 3));
  std::mt19937_64 rng(0x626102);
  for (int trial = 0; trial < 25; ++trial) {
    SetFamily g = testsupport::random_family(rng, 4, 4 + rng() % 12);
    for (std::uint32_t d : {2u, 3u})
      CHECK(count_boolean_algebras(g, d) <= witness_count_bound(g.size(), d));
  }
}

TEST_CASE("determining subfamilies have the logarithmic size and generate") {
  for (std::uint32_t d : {2u, 3u}) {
    SetFamily f = power_set_family(4);
    EnumerationResult r = enumerate_boolean_algebras(f, d);
    REQUIRE(r.complete);
    REQUIRE(!r.witnesses.empty());
    for (const auto& w : r.witnesses) {
      DeterminingSet det = determining_subfamily(w);
      CHECK(det.sets.size() == ceil_log2(d + 2));
      CHECK(det.member_indices.size() == det.sets.size());
      for (std::size_t j = 0; j < det.sets.size(); ++j)
        CHECK(f.member(det.member_indices[j]) == det.sets[j]);
      CHECK(generates(det.sets, w));

      // Tight minimality: at min_generating_size some subfamily of the
      // algebra generates it, one set fewer none does.  An empty base
      // lowers the threshold, so the determining set is minimal exactly
      // when the base is nonempty.
      const std::uint32_t full = 1u << d;
      const std::uint32_t threshold = min_generating_size(w);
      CHECK(threshold <= det.sets.size());
      if (!w.base.empty()) CHECK(threshold == det.sets.size());
      auto any_generates = [&](std::uint32_t pick) {
        if (pick == 0) return generates(std::vector<FiniteSet>{}, w);
        std::vector<std::uint32_t> idx(pick);
        for (std::uint32_t i = 0; i < pick; ++i) idx[i] = i;
        while (true) {
          std::vector<FiniteSet> sub;
          for (std::uint32_t i : idx) sub.push_back(w.set_for_mask(i));
          if (generates(sub, w)) return true;
          std::uint32_t i = pick;
          while (i > 0 && idx[i - 1] == full - pick + i - 1) --i;
          if (i == 0) return false;
          ++idx[i - 1];
          for (std::uint32_t j = i; j < pick; ++j) idx[j] = idx[j - 1] + 1;
        }
      };
      CHECK(any_generates(threshold));
      CHECK_FALSE(any_generates(threshold - 1));
    }
  }
}

TEST_CASE("dimension one lists ordered proper-subset pairs") {
  SetFamily f = SetFamily::from_element_lists(3, {{1}, {1, 2}, {3}, {1, 2, 3}});
  // Pairs: (1)<(12), (1)<(123), (12)<(123), (3)<(123).
  CHECK(count_boolean_algebras(f, 1) == 4);
  for (const auto& w : enumerate_boolean_algebras(f, 1).witnesses) {
    CHECK(w.base.proper_subset_of(w.set_for_mask(1)));
    CHECK(verify_witness(f, w));
  }
}

TEST_CASE("bd-free families produce no witnesses at any candidate set") {
  SetFamily chain = SetFamily::from_element_lists(4, {{1}, {1, 2}, {1, 2, 3}});
  CHECK(is_bd_free(chain, 2));
  CHECK(count_boolean_algebras(chain, 2) == 0);
  CHECK_FALSE(find_boolean_algebra(chain, all_of(chain), 2).has_value());
}
