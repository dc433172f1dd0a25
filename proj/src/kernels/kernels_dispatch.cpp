#include "setfam/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace setfam::kernels {

#if defined(__x86_64__)
namespace detail {
const Table& avx2_table();  // kernels_avx2.cpp, compiled with -mavx2
}
#endif

const Table* avx2() {
#if defined(__x86_64__)
  if (__builtin_cpu_supports("avx2")) return &detail::avx2_table();
#endif
  return nullptr;
}

const Table& active() {
  static const Table* chosen = [] {
    const char* force = std::getenv("SETFAM_KERNELS");
    if (force != nullptr && std::strcmp(force, "scalar") == 0) return &scalar();
    if (const Table* simd = avx2()) return simd;
    return &scalar();
  }();
  return *chosen;
}

}  // namespace setfam::kernels
