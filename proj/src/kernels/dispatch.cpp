#include <cstdlib>
#include <string_view>

#include "cantorprod/kernels.hpp"

namespace cantorprod::kernels {

bool avx2_available() {
#if defined(CANTORPROD_HAVE_AVX2_KERNELS) && (defined(__x86_64__) || defined(__i386__))
  static const bool available = __builtin_cpu_supports("avx2");
  return available;
#else
  return false;
#endif
}

Backend default_backend() {
  if (const char* env = std::getenv("CANTORPROD_BACKEND"); env && std::string_view(env) == "scalar")
    return Backend::scalar;
  return avx2_available() ? Backend::avx2 : Backend::scalar;
}

const char* backend_name(Backend b) { return b == Backend::avx2 ? "avx2" : "scalar"; }

void row_breaks(Backend backend, Width width, std::uint64_t a_lo, std::uint64_t a_hi,
                std::span<const std::uint64_t> b_lo, std::span<const std::uint64_t> b_hi,
                std::vector<std::uint32_t>& breaks) {
  if (backend == Backend::avx2 && avx2_available()) {
    if (width == Width::narrow)
      avx2::row_breaks_narrow(a_lo, a_hi, b_lo, b_hi, breaks);
    else
      avx2::row_breaks_wide(a_lo, a_hi, b_lo, b_hi, breaks);
    return;
  }
  scalar::row_breaks(a_lo, a_hi, b_lo, b_hi, breaks);
}

}  // namespace cantorprod::kernels
