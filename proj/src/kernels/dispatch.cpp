#include "summax/kernels/dispatch.hpp"

#include <cstdlib>
#include <cstring>

namespace summax::kernels {

#ifdef SUMMAX_HAVE_AVX2_TU
const KernelTable* avx2_table_impl();
#endif

const KernelTable* avx2_table() {
#ifdef SUMMAX_HAVE_AVX2_TU
  return avx2_table_impl();
#else
  return nullptr;
#endif
}

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable& active() {
  static const KernelTable* resolved = [] {
    const char* env = std::getenv("SUMMAX_SIMD");
    if (env != nullptr && std::strcmp(env, "scalar") == 0) return &scalar_table();
    const KernelTable* avx2 = avx2_table();
    if (avx2 != nullptr && cpu_has_avx2()) return avx2;
    return &scalar_table();
  }();
  return *resolved;
}

}  // namespace summax::kernels
