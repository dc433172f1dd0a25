#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "setfam/constructions.hpp"
#include "setfam/errors.hpp"
#include "setfam/oracle.hpp"
#include "support/oracles.hpp"

using namespace setfam;

namespace {

void check_against_brute(const SetFamily& f, const Property& p) {
  OracleResult r = max_subfamily(f, p);
  std::uint32_t brute = testsupport::brute_max_subfamily(f, p);
  CHECK(r.proven);
  CHECK(r.optimum == brute);
  CHECK(r.witness.size() == r.optimum);
  SetFamily sub = f.subfamily(r.witness);
  CHECK(testsupport::naive_holds(sub, p));
}

}  // namespace

TEST_CASE("branch and bound matches exhaustive search on random families") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint32_t m = 3 + static_cast<std::uint32_t>(rng() % 10);
    SetFamily f = testsupport::random_family(rng, 5, m);
    check_against_brute(f, AUnionFree{2});
    check_against_brute(f, AUnionFree{3});
    check_against_brute(f, BdFree{2});
    check_against_brute(f, ABUnionFree{2, 2});
  }
}

TEST_CASE("frozen optima on named families") {
  CHECK(max_subfamily(erdos_shelah_family(2), AUnionFree{2}).optimum == 3);
  CHECK(max_subfamily(power_set_family(2), BdFree{2}).optimum == 3);
  CHECK(max_subfamily(bd_extremal_family(2, 2), BdFree{2}).optimum == 5);
  CHECK(max_subfamily(co_singleton_family(5), ABUnionFree{2, 2}).optimum == 3);
  CHECK(max_subfamily(power_set_family(3), BdFree{2}).optimum == 6);
  CHECK(max_subfamily(power_set_family(4), BdFree{2}).optimum == 11);
}

TEST_CASE("families already satisfying the property come back whole") {
  SetFamily chain = SetFamily::from_element_lists(
      4, {{1}, {1, 2}, {1, 2, 3}, {1, 2, 3, 4}});
  OracleResult r = max_subfamily(chain, AUnionFree{2});
  CHECK(r.proven);
  CHECK(r.optimum == 4);
  CHECK(r.witness == std::vector<std::uint32_t>{0, 1, 2, 3});
  // A no-violation instance needs exactly the root node.
  CHECK(r.nodes == 1);
}

TEST_CASE("the node limit yields an unproven incumbent instead of failing") {
  SetFamily f = power_set_family(5);
  OracleResult r = max_subfamily(f, BdFree{2}, {.node_limit = 3});
  CHECK_FALSE(r.proven);
  CHECK(r.nodes <= 3);
  CHECK(r.witness.size() == r.optimum);
  CHECK(testsupport::naive_is_bd_free(f.subfamily(r.witness), 2));

  OracleResult full = max_subfamily(power_set_family(4), BdFree{2});
  CHECK(full.proven);
  CHECK(full.optimum == 11);
}

TEST_CASE("a verified initial incumbent seeds the bound") {
  SetFamily f = power_set_family(4);
  OracleResult plain = max_subfamily(f, BdFree{2});
  SearchConfig cfg;
  cfg.initial = plain.witness;
  OracleResult seeded = max_subfamily(f, BdFree{2}, cfg);
  CHECK(seeded.proven);
  CHECK(seeded.optimum == plain.optimum);
  // Proving optimality from the optimal incumbent explores no more nodes.
  CHECK(seeded.nodes <= plain.nodes);
}

TEST_CASE("violating initial incumbents are rejected") {
  SetFamily f = power_set_family(2);
  SearchConfig cfg;
  cfg.initial = std::vector<std::uint32_t>{0, 1, 2, 3};
  CHECK_THROWS_AS(max_subfamily(f, BdFree{2}, cfg), Error);
  cfg.initial = std::vector<std::uint32_t>{0, 9};
  CHECK_THROWS_AS(max_subfamily(f, BdFree{2}, cfg), Error);
}

TEST_CASE("empty input is a proven zero") {
  SetFamily empty(1, std::vector<FiniteSet>{});
  OracleResult r = max_subfamily(empty, AUnionFree{2});
  CHECK(r.proven);
  CHECK(r.optimum == 0);
  CHECK(r.witness.empty());
}

TEST_CASE("minimum over families reproduces small frozen values") {
  MinFamiliesResult uf = min_over_families(3, 2, AUnionFree{2});
  CHECK(uf.value == 2);
  CHECK(uf.proven);
  CHECK(uf.universe == 2);
  CHECK(uf.worst_family.size() == 3);
  // The reported worst family attains the minimum.
  SetFamily worst = SetFamily::from_element_lists(uf.universe, uf.worst_family);
  CHECK(testsupport::brute_max_subfamily(worst, AUnionFree{2}) == 2);

  MinFamiliesResult bd = min_over_families(4, 2, BdFree{2});
  CHECK(bd.value == 3);
  CHECK(bd.worst_family.size() == 4);
}

TEST_CASE("minimum over families is a truthful lower envelope") {
  // Every 3-member family in 2^[2] must admit a 2-union-free subfamily at
  // least as large as the reported minimum.
  MinFamiliesResult r = min_over_families(3, 2, AUnionFree{2});
  SetFamily ps = power_set_family(2);
  for (std::uint32_t x = 0; x < 4; ++x)
    for (std::uint32_t y = x + 1; y < 4; ++y)
      for (std::uint32_t z = y + 1; z < 4; ++z) {
        SetFamily g = ps.subfamily(std::vector<std::uint32_t>{x, y, z});
        CHECK(testsupport::brute_max_subfamily(g, AUnionFree{2}) >= r.value);
      }
}

TEST_CASE("the enumeration budget is enforced up front") {
  CHECK_THROWS_AS(min_over_families(10, 5, AUnionFree{2}, {}, 1000), LimitExceededError);
  CHECK_THROWS_AS(min_over_families(3, 7, AUnionFree{2}), Error);
}
