#include <cstdlib>
#include <string_view>

#include "mcl/kernels/kernels.hpp"

namespace mcl::kernels {

#ifndef MCL_HAVE_AVX2
const Table* avx2_table() { return nullptr; }
#endif

bool avx2_supported() {
#if defined(MCL_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const Table& active() {
  static const Table& chosen = [] () -> const Table& {
    const char* env = std::getenv("MCL_KERNEL");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_table();
    if (avx2_supported() && avx2_table() != nullptr) return *avx2_table();
    return scalar_table();
  }();
  return chosen;
}

}  // namespace mcl::kernels
