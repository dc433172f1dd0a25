// AVX2 variants of the scan kernels.  This translation unit is compiled with
// -mavx2 on x86-64; the dispatcher only reaches it after a runtime CPUID
// check.  The w == 1 fast path (universe <= 64, four rows per vector) is the
// vectorized one; wider rows fall back to the scalar reference.

#include "setfam/kernels.hpp"

#if defined(__x86_64__)

#include <immintrin.h>

#include <bit>
#include <cstring>

namespace setfam::kernels {
namespace {

// Relation per 4-row block, as a 4-bit mask.
enum class Rel { Subset, Superset, Equal };

template <Rel R>
inline unsigned block_mask(__m256i rows, __m256i target) {
  __m256i cmp;
  if constexpr (R == Rel::Subset) {
    // row & ~target == 0
    cmp = _mm256_cmpeq_epi64(_mm256_andnot_si256(target, rows), _mm256_setzero_si256());
  } else if constexpr (R == Rel::Superset) {
    // target & ~row == 0
    cmp = _mm256_cmpeq_epi64(_mm256_andnot_si256(rows, target), _mm256_setzero_si256());
  } else {
    cmp = _mm256_cmpeq_epi64(rows, target);
  }
  return static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(cmp)));
}

template <Rel R>
inline bool row_rel(std::uint64_t row, std::uint64_t target) {
  if constexpr (R == Rel::Subset) return (row & ~target) == 0;
  if constexpr (R == Rel::Superset) return (target & ~row) == 0;
  return row == target;
}

template <Rel R>
void rel_mask_w1(const std::uint64_t* packed, std::size_t m, const std::uint64_t target,
                 std::uint64_t* out_bits) {
  std::memset(out_bits, 0, mask_words(m) * sizeof(std::uint64_t));
  const __m256i t = _mm256_set1_epi64x(static_cast<long long>(target));
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    const __m256i rows = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(packed + i));
    const std::uint64_t bits = block_mask<R>(rows, t);
    // i is a multiple of 4 and 4 divides 64, so the nibble never straddles words
    out_bits[i >> 6] |= bits << (i & 63);
  }
  for (; i < m; ++i) {
    if (row_rel<R>(packed[i], target)) out_bits[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
}

template <Rel R>
void rel_mask(const std::uint64_t* packed, std::size_t m, std::size_t w,
              const std::uint64_t* target, std::uint64_t* out_bits) {
  if (w == 1) {
    rel_mask_w1<R>(packed, m, *target, out_bits);
    return;
  }
  const Table& ref = scalar();
  if constexpr (R == Rel::Subset) ref.subset_mask(packed, m, w, target, out_bits);
  if constexpr (R == Rel::Superset) ref.superset_mask(packed, m, w, target, out_bits);
  if constexpr (R == Rel::Equal) ref.equal_mask(packed, m, w, target, out_bits);
}

std::int64_t find_equal_impl(const std::uint64_t* packed, std::size_t m, std::size_t w,
                             const std::uint64_t* target) {
  if (w != 1) return scalar().find_equal(packed, m, w, target);
  const __m256i t = _mm256_set1_epi64x(static_cast<long long>(*target));
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    const __m256i rows = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(packed + i));
    const unsigned bits = block_mask<Rel::Equal>(rows, t);
    if (bits) return static_cast<std::int64_t>(i + static_cast<unsigned>(std::countr_zero(bits)));
  }
  for (; i < m; ++i) {
    if (packed[i] == *target) return static_cast<std::int64_t>(i);
  }
  return -1;
}

void union_all_impl(const std::uint64_t* packed, std::size_t m, std::size_t w,
                    std::uint64_t* out) {
  if (w != 1) {
    scalar().union_all(packed, m, w, out);
    return;
  }
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(packed + i)));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t u = lanes[0] | lanes[1] | lanes[2] | lanes[3];
  for (; i < m; ++i) u |= packed[i];
  out[0] = u;
}

}  // namespace

namespace detail {

const Table& avx2_table() {
  static const Table table{
      "avx2",
      &rel_mask<Rel::Subset>,
      &rel_mask<Rel::Superset>,
      &rel_mask<Rel::Equal>,
      &find_equal_impl,
      &union_all_impl,
  };
  return table;
}

}  // namespace detail
}  // namespace setfam::kernels

#endif  // __x86_64__
