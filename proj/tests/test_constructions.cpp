#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "setfam/constructions.hpp"
#include "setfam/errors.hpp"
#include "setfam/family.hpp"

using namespace setfam;

namespace {

std::vector<std::uint32_t> elems(const SetFamily& f, std::uint32_t i) {
  return f.member(i).elements();
}

}  // namespace

TEST_CASE("chain product lays members out first coordinate fastest") {
  SetFamily f = chain_product(std::vector<std::uint32_t>{2, 3});
  REQUIRE(f.size() == 6);
  CHECK(f.universe_size() == 5);
  // Chain 1 owns elements {1,2}, chain 2 owns {3,4,5}; member (i,j) is the
  // union of the i-prefix and the j-prefix and sits at index (i-1)+2(j-1).
  CHECK(elems(f, 0) == std::vector<std::uint32_t>{1, 3});
  CHECK(elems(f, 1) == std::vector<std::uint32_t>{1, 2, 3});
  CHECK(elems(f, 2) == std::vector<std::uint32_t>{1, 3, 4});
  CHECK(elems(f, 3) == std::vector<std::uint32_t>{1, 2, 3, 4});
  CHECK(elems(f, 4) == std::vector<std::uint32_t>{1, 3, 4, 5});
  CHECK(elems(f, 5) == std::vector<std::uint32_t>{1, 2, 3, 4, 5});
}

TEST_CASE("chain product guards its inputs") {
  CHECK_THROWS_AS(chain_product(std::vector<std::uint32_t>{}), Error);
  CHECK_THROWS_AS(chain_product(std::vector<std::uint32_t>{2, 0}), Error);
  CHECK_THROWS_AS(chain_product(std::vector<std::uint32_t>{1024, 1024}),
                  UniverseTooLargeError);  // member count cap
  CHECK_THROWS_AS(chain_product(std::vector<std::uint32_t>{5000}),
                  UniverseTooLargeError);  // universe cap at default 4096
  CHECK_NOTHROW(chain_product(std::vector<std::uint32_t>{5000}, 8192));
}

TEST_CASE("the two-chain square family is the k by k grid") {
  for (std::uint32_t k : {1u, 2u, 3u, 5u}) {
    SetFamily es = erdos_shelah_family(k);
    SetFamily cp = chain_product(std::vector<std::uint32_t>{k, k});
    REQUIRE(es.size() == k * k);
    for (std::uint32_t i = 0; i < es.size(); ++i) CHECK(es.member(i) == cp.member(i));
  }
}

TEST_CASE("extremal product chains square in length") {
  SetFamily f = bd_extremal_family(2, 3);
  // Chains of lengths 2, 4, 16: one element set per coordinate tuple.
  CHECK(f.size() == 2 * 4 * 16);
  CHECK(f.universe_size() == 2 + 4 + 16);
  CHECK(bd_extremal_family(3, 2).size() == 3 * 9);
  CHECK_THROWS_AS(bd_extremal_family(1, 2), Error);
  CHECK_THROWS_AS(bd_extremal_family(2, 1), Error);
  CHECK_THROWS_AS(bd_extremal_family(4, 4), UniverseTooLargeError);  // 4^8 elements in one chain
}

TEST_CASE("leveled families stack complete grids over the lower levels") {
  SetFamily f = leveled_family(std::vector<std::uint32_t>{2, 3});
  REQUIRE(f.size() == 2 * 2 + 3 * 3);
  CHECK(f.universe_size() == 2 * 2 + 2 * 3);
  // Level 1 members live inside the first 4 elements.
  for (std::uint32_t i = 0; i < 4; ++i)
    for (std::uint32_t e : elems(f, i)) CHECK(e <= 4);
  // Every level 2 member contains all of level 1's ground elements.
  FiniteSet lower = FiniteSet::from_elements(
      f.universe_size(), std::vector<std::uint32_t>{1, 2, 3, 4});
  for (std::uint32_t i = 4; i < f.size(); ++i)
    CHECK(lower.subset_of(f.member(i)));

  SetFamily uniform = leveled_family(3, 2);
  SetFamily spelled = leveled_family(std::vector<std::uint32_t>{2, 2, 2});
  REQUIRE(uniform.size() == spelled.size());
  for (std::uint32_t i = 0; i < uniform.size(); ++i)
    CHECK(uniform.member(i) == spelled.member(i));
}

TEST_CASE("geometric level sizes follow the squared ratio schedule") {
  CHECK(geometric_level_sizes(8, 2, 3) == std::vector<std::uint32_t>{2, 8, 32});
  CHECK(geometric_level_sizes(4, 1, 3) == std::vector<std::uint32_t>{1, 4, 16});
  CHECK_THROWS_AS(geometric_level_sizes(3, 2, 2), GeometricUndefinedError);
  CHECK_THROWS_AS(geometric_level_sizes(2, 1, 1), GeometricUndefinedError);

  // a = 15 gives b = 4, ratio (3/2)^2 = 2.25, rounded half up per level.
  CHECK(geometric_level_sizes(15, 4, 3) == std::vector<std::uint32_t>{4, 9, 20});

  SetFamily f = geometric_leveled_family(8, 2, 3);
  CHECK(f.size() == 2 * 2 + 8 * 8 + 32 * 32);
  CHECK(f.universe_size() == 2 * (2 + 8 + 32));
}

TEST_CASE("co-singleton family lists complements in ascending order") {
  SetFamily f = co_singleton_family(5);
  REQUIRE(f.size() == 5);
  CHECK(f.universe_size() == 5);
  CHECK(elems(f, 0) == std::vector<std::uint32_t>{1, 2, 3, 4});
  CHECK(elems(f, 1) == std::vector<std::uint32_t>{1, 2, 3, 5});
  CHECK(elems(f, 2) == std::vector<std::uint32_t>{1, 2, 4, 5});
  CHECK(elems(f, 3) == std::vector<std::uint32_t>{1, 3, 4, 5});
  CHECK(elems(f, 4) == std::vector<std::uint32_t>{2, 3, 4, 5});
  CHECK_THROWS_AS(co_singleton_family(1), Error);
}

TEST_CASE("power set family enumerates in mask order") {
  SetFamily f = power_set_family(3);
  REQUIRE(f.size() == 8);
  CHECK(elems(f, 0).empty());
  CHECK(elems(f, 1) == std::vector<std::uint32_t>{1});
  CHECK(elems(f, 2) == std::vector<std::uint32_t>{2});
  CHECK(elems(f, 3) == std::vector<std::uint32_t>{1, 2});
  CHECK(elems(f, 7) == std::vector<std::uint32_t>{1, 2, 3});

  CHECK(power_set_family(0).size() == 1);
  CHECK(power_set_family(0).member(0).empty());
  CHECK_THROWS_AS(power_set_family(21), UniverseTooLargeError);
}
