#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "setfam/numeric.hpp"

namespace setfam {

// Closed-form bound formulas.  Values carrying an omitted asymptotic term
// come back as NamedBound rows with the asymptotic flag raised; reports
// must render those as trends, never as pass/fail gates.
struct NamedBound {
  std::string name;
  double value = 0.0;
  bool asymptotic = false;
  std::string note;
};

struct ExponentPair {
  Rational e;        // extraction exponent e_d
  Rational e_prime;  // upper-bound exponent e_d'
};

// e_d = (2^d - ceil_log2(d+2)) / (2^d - 1), e_d' = (2^d - 2)/(2^d - 1).
ExponentPair exponents(std::uint32_t d);

// (3 * 2^{-7/3} m^{2/3}, 1.5 m^{2/3}); both sides carry o(1) caveats.
std::pair<NamedBound, NamedBound> b2_bounds(std::uint64_t m);

struct UnionFreeBounds {
  NamedBound kleitman_lower;  // sqrt(2m) - 1/2
  NamedBound eq3_upper;       // 4a + 4 a^{1/4} sqrt(m)
  NamedBound fls_lower;       // max{a, (1/3) a^{1/4} sqrt(m)}, external reference
};
UnionFreeBounds union_free_bounds(std::uint64_t m, std::uint32_t a);

// a - 2 + 2k(ceil_sqrt(a+1) - 1) + (2k-1)(q-1), exact.
std::uint64_t eq4_bound(std::uint32_t a, std::uint32_t k, std::uint32_t q);

// sqrt(8) a^{1/4} sqrt(m); undefined for a < 4.
double geometric_refinement_bound(std::uint64_t m, std::uint32_t a);

// 2^n / n^{2^{-d}}, order-only (the constant is not known here).
double grs_reference(std::uint32_t n, std::uint32_t d);

// a + b - 1, exact.
std::uint64_t ab_union_free_value(std::uint32_t a, std::uint32_t b);

// empirical_f / (a^{1/4} sqrt(m)).
double problem52_ratio(double empirical_f, std::uint32_t a, std::uint64_t m);

// Pessimistic first-moment guarantee at the default probability, using the
// binomial witness cap; scales as m^{e_d}.
double pessimistic_deletion_guarantee(std::uint64_t m, std::uint32_t d);

// guarantee(2^e) / (2^e)^{e_d} for each exponent; the series must flatten
// toward 3*2^{-7/3} for d=2 and 5/6 for d=3.
std::vector<double> deletion_guarantee_ratio_series(std::uint32_t d,
                                                    std::uint32_t min_exp,
                                                    std::uint32_t max_exp);

}  // namespace setfam
