#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "setfam/bounds.hpp"
#include "setfam/errors.hpp"
#include "setfam/extraction.hpp"

using namespace setfam;

TEST_CASE("exponent pairs are exact small rationals") {
  ExponentPair e2 = exponents(2);
  CHECK(e2.e == Rational(2, 3));
  CHECK(e2.e_prime == Rational(2, 3));

  ExponentPair e3 = exponents(3);
  CHECK(e3.e == Rational(5, 7));
  CHECK(e3.e_prime == Rational(6, 7));

  ExponentPair e4 = exponents(4);
  CHECK(e4.e == Rational(13, 15));
  CHECK(e4.e_prime == Rational(14, 15));

  // The pair closes up as d grows but never meets below d = 2.
  for (std::uint32_t d = 2; d <= 10; ++d) {
    ExponentPair p = exponents(d);
    CHECK(p.e.value() <= p.e_prime.value());
    if (d > 2) CHECK(p.e.value() < p.e_prime.value());
  }
  CHECK_THROWS_AS(exponents(1), Error);
  CHECK_THROWS_AS(exponents(63), Error);
}

TEST_CASE("the two-sided b2 envelope brackets the extraction exponent") {
  auto [lower, upper] = b2_bounds(512);
  const double m23 = std::pow(512.0, 2.0 / 3.0);
  CHECK(lower.value == doctest::Approx(3.0 * std::pow(2.0, -7.0 / 3.0) * m23));
  CHECK(upper.value == doctest::Approx(1.5 * m23));
  CHECK(lower.value < upper.value);
  CHECK(lower.asymptotic);
  CHECK_FALSE(upper.asymptotic);
  CHECK_FALSE(lower.note.empty());
}

TEST_CASE("union-free bound trio keeps its ordering on large inputs") {
  for (std::uint64_t m : {16ull, 256ull, 65536ull}) {
    for (std::uint32_t a : {2u, 4u, 9u}) {
      UnionFreeBounds b = union_free_bounds(m, a);
      CHECK(b.kleitman_lower.value ==
            doctest::Approx(std::sqrt(2.0 * static_cast<double>(m)) - 0.5));
      // The lower references stay below the upper envelope.
      CHECK(b.kleitman_lower.value <= b.eq3_upper.value);
      CHECK(b.fls_lower.value <= b.eq3_upper.value);
      CHECK_FALSE(b.fls_lower.note.empty());
    }
  }
  CHECK_THROWS_AS(union_free_bounds(0, 2), Error);
  CHECK_THROWS_AS(union_free_bounds(8, 1), Error);
}

TEST_CASE("the leveled bound is exact integer arithmetic") {
  CHECK(eq4_bound(2, 2, 2) == 7);
  CHECK(eq4_bound(2, 2, 1) == 4);
  CHECK(eq4_bound(3, 2, 2) == 8);
  CHECK(eq4_bound(4, 3, 3) == 2 + 6 * 2 + 5 * 2);
  CHECK_THROWS_AS(eq4_bound(1, 2, 2), Error);
  CHECK_THROWS_AS(eq4_bound(2, 0, 2), Error);
  CHECK_THROWS_AS(eq4_bound(2, 2, 0), Error);
}

TEST_CASE("the geometric refinement refuses small a") {
  CHECK_THROWS_AS(geometric_refinement_bound(100, 2), GeometricUndefinedError);
  CHECK_THROWS_AS(geometric_refinement_bound(100, 3), GeometricUndefinedError);
  CHECK(geometric_refinement_bound(100, 4) ==
        doctest::Approx(std::sqrt(8.0) * std::pow(4.0, 0.25) * 10.0));
}

TEST_CASE("reference formulas") {
  CHECK(grs_reference(8, 2) == doctest::Approx(256.0 / std::pow(8.0, 0.25)));
  CHECK(ab_union_free_value(2, 2) == 3);
  CHECK(ab_union_free_value(3, 5) == 7);
  CHECK_THROWS_AS(ab_union_free_value(0, 2), Error);
  CHECK(problem52_ratio(12.0, 4, 144) == doctest::Approx(12.0 / (std::sqrt(2.0) * 12.0)));
  CHECK_THROWS_AS(problem52_ratio(1.0, 1, 4), Error);
}

TEST_CASE("the pessimistic guarantee matches the capped first moment") {
  const double p = default_probability(64, 2);
  const double expect = 64.0 * p - std::pow(p, 4.0) * (64.0 * 63.0 / 2.0);
  CHECK(pessimistic_deletion_guarantee(64, 2) == doctest::Approx(expect));
}

TEST_CASE("guarantee ratios flatten toward the predicted constants") {
  std::vector<double> r2 = deletion_guarantee_ratio_series(2, 6, 16);
  REQUIRE(r2.size() == 11);
  const double limit2 = 3.0 * std::pow(2.0, -7.0 / 3.0);
  // Each doubling of m closes the gap to the limit.
  for (std::size_t i = 1; i < r2.size(); ++i) {
    CHECK(std::abs(limit2 - r2[i]) < std::abs(limit2 - r2[i - 1]));
  }
  CHECK(r2.back() == doctest::Approx(limit2).epsilon(0.02));

  std::vector<double> r3 = deletion_guarantee_ratio_series(3, 6, 16);
  const double limit3 = 5.0 / 6.0;
  for (std::size_t i = 1; i < r3.size(); ++i) {
    CHECK(std::abs(limit3 - r3[i]) < std::abs(limit3 - r3[i - 1]));
  }
  CHECK(r3.back() == doctest::Approx(limit3).epsilon(0.05));

  CHECK_THROWS_AS(deletion_guarantee_ratio_series(2, 8, 7), Error);
  CHECK_THROWS_AS(deletion_guarantee_ratio_series(2, 2, 63), Error);
}
