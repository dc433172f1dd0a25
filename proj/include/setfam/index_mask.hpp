#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace setfam {

// Bit mask over family member indices; the layout matches the kernels'
// out_bits convention, so kernel results can be combined with these in place.
class IndexMask {
 public:
  IndexMask() = default;
  explicit IndexMask(std::size_t m, bool all_set = false)
      : m_(m), bits_((m + 63) / 64, all_set ? ~std::uint64_t{0} : 0) {
    if (all_set) trim();
  }

  static IndexMask from_indices(std::size_t m, std::span<const std::uint32_t> indices) {
    IndexMask mask(m);
    for (std::uint32_t i : indices) mask.set(i);
    return mask;
  }

  std::size_t universe() const { return m_; }
  bool test(std::size_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i) { bits_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (std::uint64_t w : bits_) {
      if (w) return true;
    }
    return false;
  }

  IndexMask& operator&=(const IndexMask& o) {
    for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] &= o.bits_[k];
    return *this;
  }
  IndexMask& operator|=(const IndexMask& o) {
    for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] |= o.bits_[k];
    return *this;
  }
  IndexMask& subtract(const IndexMask& o) {
    for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] &= ~o.bits_[k];
    return *this;
  }

  std::vector<std::uint32_t> to_indices() const {
    std::vector<std::uint32_t> out;
    for (std::size_t k = 0; k < bits_.size(); ++k) {
      std::uint64_t w = bits_[k];
      while (w) {
        out.push_back(static_cast<std::uint32_t>(k * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < bits_.size(); ++k) {
      std::uint64_t w = bits_[k];
      while (w) {
        fn(static_cast<std::uint32_t>(k * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::uint64_t* data() { return bits_.data(); }
  const std::uint64_t* data() const { return bits_.data(); }
  std::size_t word_count() const { return bits_.size(); }

  bool operator==(const IndexMask&) const = default;

 private:
  void trim() {
    if (m_ % 64 != 0 && !bits_.empty()) {
      bits_.back() &= (~std::uint64_t{0}) >> (64 - m_ % 64);
    }
  }

  std::size_t m_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace setfam
