#include <cstdlib>
#include <string_view>

#include "apeuler/simd/kernels.hpp"

namespace apeuler::simd {

#if defined(APEULER_HAVE_AVX2)
const KernelTable* avx2_kernels_impl();
#endif

const KernelTable* avx2_kernels() {
#if defined(APEULER_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? avx2_kernels_impl() : nullptr;
#else
  return nullptr;
#endif
}

namespace {

const KernelTable* automatic() {
  if (const char* env = std::getenv("APEULER_SIMD"); env != nullptr && std::string_view(env) == "scalar") {
    return &scalar_kernels();
  }
  if (const KernelTable* t = avx2_kernels()) return t;
  return &scalar_kernels();
}

const KernelTable*& current() {
  static const KernelTable* table = automatic();
  return table;
}

}  // namespace

const KernelTable& active_kernels() { return *current(); }

bool select_kernels(std::string_view name) {
  if (name == "scalar") {
    current() = &scalar_kernels();
    return true;
  }
  if (name == "avx2") {
    if (const KernelTable* t = avx2_kernels()) {
      current() = t;
      return true;
    }
    return false;
  }
  if (name == "auto") {
    current() = automatic();
    return true;
  }
  return false;
}

}  // namespace apeuler::simd
