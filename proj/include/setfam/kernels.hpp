#pragma once

#include <cstddef>
#include <cstdint>

// Scan kernels over packed set storage.
//
// A family of m sets over a universe of n elements is stored as one
// contiguous array of m * w 64-bit words, where w = ceil(n / 64); row i
// occupies words [i*w, (i+1)*w).  The kernels below are the inner loops of
// every predicate and oracle: relate each row to a target set of the same
// width and emit one result bit per row, packed into ceil(m/64) output
// words (bit i of the output corresponds to row i).
//
// Two implementations exist: a scalar reference and an AVX2 variant for the
// one-word-per-set fast path (universe <= 64).  `active()` picks the best
// table for the running CPU once; SETFAM_KERNELS=scalar forces the
// reference implementation.  The two tables are required to be bit-exact
// equal on all inputs, and the test suite checks this, so callers never
// need to care which one they got.

namespace setfam::kernels {

struct Table {
  const char* name;
  // bit i set iff row_i is a subset of target        (row & ~target == 0)
  void (*subset_mask)(const std::uint64_t* packed, std::size_t m, std::size_t w,
                      const std::uint64_t* target, std::uint64_t* out_bits);
  // bit i set iff row_i is a superset of target      (target & ~row == 0)
  void (*superset_mask)(const std::uint64_t* packed, std::size_t m, std::size_t w,
                        const std::uint64_t* target, std::uint64_t* out_bits);
  // bit i set iff row_i equals target
  void (*equal_mask)(const std::uint64_t* packed, std::size_t m, std::size_t w,
                     const std::uint64_t* target, std::uint64_t* out_bits);
  // index of the first row equal to target, or -1
  std::int64_t (*find_equal)(const std::uint64_t* packed, std::size_t m, std::size_t w,
                             const std::uint64_t* target);
  // out = union of all m rows (out has w words; zeroed when m == 0)
  void (*union_all)(const std::uint64_t* packed, std::size_t m, std::size_t w,
                    std::uint64_t* out);
};

const Table& scalar();

// AVX2 table, or nullptr when the build or CPU lacks it.
const Table* avx2();

// Dispatched table: AVX2 when supported unless SETFAM_KERNELS=scalar.
const Table& active();

inline std::size_t mask_words(std::size_t m) { return (m + 63) / 64; }

}  // namespace setfam::kernels
