#include "setfam/finite_set.hpp"

#include <bit>
#include <cassert>

#include "setfam/errors.hpp"

namespace setfam {

FiniteSet FiniteSet::from_elements(std::uint32_t universe,
                                   std::span<const std::uint32_t> elements) {
  FiniteSet s(words_for_universe(universe));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const std::uint32_t e = elements[i];
    if (e < 1 || e > universe) {
      throw ElementOutOfRangeError(0, static_cast<long>(e),
                                   "element " + std::to_string(e) + " outside universe [1," +
                                       std::to_string(universe) + "]");
    }
    s.insert(e);
  }
  return s;
}

std::size_t FiniteSet::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool FiniteSet::empty() const {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> FiniteSet::elements() const {
  std::vector<std::uint32_t> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    std::uint64_t w = words_[k];
    while (w) {
      const int b = std::countr_zero(w);
      out.push_back(static_cast<std::uint32_t>(k * 64 + b + 1));
      w &= w - 1;
    }
  }
  return out;
}

std::uint32_t FiniteSet::smallest_element() const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k]) return static_cast<std::uint32_t>(k * 64 + std::countr_zero(words_[k]) + 1);
  }
  return 0;
}

FiniteSet FiniteSet::operator|(const FiniteSet& o) const {
  assert(words_.size() == o.words_.size());
  FiniteSet r(words_.size());
  for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] | o.words_[k];
  return r;
}

FiniteSet FiniteSet::operator&(const FiniteSet& o) const {
  assert(words_.size() == o.words_.size());
  FiniteSet r(words_.size());
  for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & o.words_[k];
  return r;
}

FiniteSet FiniteSet::operator-(const FiniteSet& o) const {
  assert(words_.size() == o.words_.size());
  FiniteSet r(words_.size());
  for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & ~o.words_[k];
  return r;
}

FiniteSet& FiniteSet::operator|=(const FiniteSet& o) {
  assert(words_.size() == o.words_.size());
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
  return *this;
}

bool FiniteSet::subset_of(const FiniteSet& o) const {
  assert(words_.size() == o.words_.size());
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] & ~o.words_[k]) return false;
  }
  return true;
}

bool FiniteSet::disjoint_with(const FiniteSet& o) const {
  assert(words_.size() == o.words_.size());
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] & o.words_[k]) return false;
  }
  return true;
}

std::uint64_t hash_words(std::span<const std::uint64_t> words) {
  // FNV-1a over the word bytes
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint64_t w : words) {
    for (int b = 0; b < 8; ++b) {
      h ^= (w >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  return h;
}

std::size_t FiniteSetHash::operator()(const FiniteSet& s) const {
  return static_cast<std::size_t>(hash_words(s.words()));
}

}  // namespace setfam
