#include "setfam/numeric.hpp"

#include <bit>
#include <stdexcept>

#include "setfam/errors.hpp"

namespace setfam {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error("64-bit overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  // r stays integral at every step because r holds C(n-k+i, i).
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = checked_mul(r, n - k + i) / i;
  }
  return r;
}

std::uint32_t ceil_log2(std::uint64_t v) {
  if (v <= 1) return 0;
  return static_cast<std::uint32_t>(64 - std::countl_zero(v - 1));
}

std::uint64_t isqrt(std::uint64_t v) {
  if (v == 0) return 0;
  std::uint64_t r = static_cast<std::uint64_t>(__builtin_sqrtl(static_cast<long double>(v)));
  while (r > 0 && r > v / r) --r;
  while ((r + 1) <= v / (r + 1)) ++r;
  return r;
}

std::uint64_t ceil_sqrt(std::uint64_t v) {
  const std::uint64_t r = isqrt(v);
  return r * r == v ? r : r + 1;
}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

}  // namespace setfam
