#include "groupoidal/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace groupoidal::kern {

const Backend* avx2_backend() {
#if defined(__x86_64__) || defined(_M_X64)
  static const Backend* table =
      __builtin_cpu_supports("avx2") ? detail::avx2_table() : nullptr;
  return table;
#else
  return nullptr;
#endif
}

const Backend* neon_backend() {
#if defined(__aarch64__) && defined(__ARM_NEON)
  return detail::neon_table();
#else
  return nullptr;
#endif
}

const Backend& active() {
  static const Backend* chosen = [] {
    if (const char* env = std::getenv("GROUPOIDAL_KERNEL")) {
      std::string_view want(env);
      if (want == "scalar") return &scalar_backend();
      if (want == "avx2" && avx2_backend()) return avx2_backend();
      if (want == "neon" && neon_backend()) return neon_backend();
    }
    if (avx2_backend()) return avx2_backend();
    if (neon_backend()) return neon_backend();
    return &scalar_backend();
  }();
  return *chosen;
}

}  // namespace groupoidal::kern
