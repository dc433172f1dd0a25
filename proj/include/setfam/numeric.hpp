#pragma once

#include <cstdint>
#include <numeric>
#include <string>

namespace setfam {

// C(n, k) in exact 64-bit arithmetic; throws on overflow rather than wrap.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Smallest e with 2^e >= v; ceil_log2(1) == 0.
std::uint32_t ceil_log2(std::uint64_t v);

// Largest r with r*r <= v.
std::uint64_t isqrt(std::uint64_t v);

// Smallest r with r*r >= v.
std::uint64_t ceil_sqrt(std::uint64_t v);

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp);

// Exact fraction with the small numerators the bound formulas produce.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
  bool operator==(const Rational&) const = default;
};

}  // namespace setfam
