#include "setfam/bounds.hpp"

#include <cmath>

#include "setfam/errors.hpp"
#include "setfam/extraction.hpp"

namespace setfam {

ExponentPair exponents(std::uint32_t d) {
  if (d < 2) throw Error("exponents need d >= 2");
  if (d > 62) throw Error("exponent arithmetic limited to d <= 62");
  const std::int64_t pow2 = std::int64_t{1} << d;
  return {Rational(pow2 - ceil_log2(d + 2), pow2 - 1), Rational(pow2 - 2, pow2 - 1)};
}

std::pair<NamedBound, NamedBound> b2_bounds(std::uint64_t m) {
  const double m23 = std::pow(static_cast<double>(m), 2.0 / 3.0);
  NamedBound lower{"b2-lower", 3.0 * std::pow(2.0, -7.0 / 3.0) * m23, true,
                   "additive o(1) factor omitted"};
  NamedBound upper{"b2-upper", 1.5 * m23, false, ""};
  return {lower, upper};
}

UnionFreeBounds union_free_bounds(std::uint64_t m, std::uint32_t a) {
  if (m < 1 || a < 2) throw Error("union-free bounds need m >= 1 and a >= 2");
  const double sm = std::sqrt(static_cast<double>(m));
  const double a14 = std::pow(static_cast<double>(a), 0.25);
  UnionFreeBounds b;
  b.kleitman_lower = {"kleitman-lower", std::sqrt(2.0 * static_cast<double>(m)) - 0.5, false, ""};
  b.eq3_upper = {"eq3-upper", 4.0 * static_cast<double>(a) + 4.0 * a14 * sm, false, ""};
  b.fls_lower = {"fls-lower", std::max(static_cast<double>(a), a14 * sm / 3.0), false,
                 "external reference value, not reproduced here"};
  return b;
}

std::uint64_t eq4_bound(std::uint32_t a, std::uint32_t k, std::uint32_t q) {
  if (a < 2 || k < 1 || q < 1) throw Error("bound needs a >= 2, k >= 1, q >= 1");
  return (a - 2) + 2ull * k * (ceil_sqrt(std::uint64_t{a} + 1) - 1) + (2ull * k - 1) * (q - 1);
}

double geometric_refinement_bound(std::uint64_t m, std::uint32_t a) {
  if (a < 4) {
    throw GeometricUndefinedError("refinement bound needs a >= 4 (a = " + std::to_string(a) +
                                  ")");
  }
  return std::sqrt(8.0) * std::pow(static_cast<double>(a), 0.25) *
         std::sqrt(static_cast<double>(m));
}

double grs_reference(std::uint32_t n, std::uint32_t d) {
  if (n < 1 || d < 1) throw Error("reference needs n >= 1 and d >= 1");
  return std::pow(2.0, static_cast<double>(n)) /
         std::pow(static_cast<double>(n), std::pow(2.0, -static_cast<double>(d)));
}

std::uint64_t ab_union_free_value(std::uint32_t a, std::uint32_t b) {
  if (a < 1 || b < 1) throw Error("need a, b >= 1");
  return std::uint64_t{a} + b - 1;
}

double problem52_ratio(double empirical_f, std::uint32_t a, std::uint64_t m) {
  if (a < 2 || m < 1) throw Error("ratio needs a >= 2 and m >= 1");
  return empirical_f /
         (std::pow(static_cast<double>(a), 0.25) * std::sqrt(static_cast<double>(m)));
}

double pessimistic_deletion_guarantee(std::uint64_t m, std::uint32_t d) {
  const double p = default_probability(m, d);
  // The binomial cap as a real, to keep the series usable past the 64-bit
  // range of C(m, ceil_log2(d+2)).
  const std::uint32_t level = ceil_log2(d + 2);
  double cap = 1.0;
  for (std::uint32_t i = 0; i < level; ++i) {
    cap *= static_cast<double>(m - i) / static_cast<double>(i + 1);
  }
  return static_cast<double>(m) * p - std::pow(p, std::pow(2.0, d)) * cap;
}

std::vector<double> deletion_guarantee_ratio_series(std::uint32_t d, std::uint32_t min_exp,
                                                    std::uint32_t max_exp) {
  if (min_exp > max_exp || max_exp > 62) throw Error("bad exponent range");
  const double ed = exponents(d).e.value();
  std::vector<double> ratios;
  ratios.reserve(max_exp - min_exp + 1);
  for (std::uint32_t e = min_exp; e <= max_exp; ++e) {
    const std::uint64_t m = std::uint64_t{1} << e;
    ratios.push_back(pessimistic_deletion_guarantee(m, d) /
                     std::pow(static_cast<double>(m), ed));
  }
  return ratios;
}

}  // namespace setfam
