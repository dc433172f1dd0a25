#include "setfam/kernels.hpp"

#include <cstring>

namespace setfam::kernels {
namespace {

inline bool row_subset(const std::uint64_t* row, const std::uint64_t* target, std::size_t w) {
  for (std::size_t k = 0; k < w; ++k) {
    if (row[k] & ~target[k]) return false;
  }
  return true;
}

inline bool row_superset(const std::uint64_t* row, const std::uint64_t* target, std::size_t w) {
  for (std::size_t k = 0; k < w; ++k) {
    if (target[k] & ~row[k]) return false;
  }
  return true;
}

inline bool row_equal(const std::uint64_t* row, const std::uint64_t* target, std::size_t w) {
  for (std::size_t k = 0; k < w; ++k) {
    if (row[k] != target[k]) return false;
  }
  return true;
}

template <bool (*Rel)(const std::uint64_t*, const std::uint64_t*, std::size_t)>
void rel_mask(const std::uint64_t* packed, std::size_t m, std::size_t w,
              const std::uint64_t* target, std::uint64_t* out_bits) {
  std::memset(out_bits, 0, mask_words(m) * sizeof(std::uint64_t));
  for (std::size_t i = 0; i < m; ++i) {
    if (Rel(packed + i * w, target, w)) {
      out_bits[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
  }
}

std::int64_t find_equal_impl(const std::uint64_t* packed, std::size_t m, std::size_t w,
                             const std::uint64_t* target) {
  for (std::size_t i = 0; i < m; ++i) {
    if (row_equal(packed + i * w, target, w)) return static_cast<std::int64_t>(i);
  }
  return -1;
}

void union_all_impl(const std::uint64_t* packed, std::size_t m, std::size_t w,
                    std::uint64_t* out) {
  std::memset(out, 0, w * sizeof(std::uint64_t));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < w; ++k) out[k] |= packed[i * w + k];
  }
}

}  // namespace

const Table& scalar() {
  static const Table table{
      "scalar",
      &rel_mask<row_subset>,
      &rel_mask<row_superset>,
      &rel_mask<row_equal>,
      &find_equal_impl,
      &union_all_impl,
  };
  return table;
}

}  // namespace setfam::kernels
