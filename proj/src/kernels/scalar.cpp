#include "cantorprod/kernels.hpp"

namespace cantorprod::kernels::scalar {

using u128 = unsigned __int128;

void row_breaks(std::uint64_t a_lo, std::uint64_t a_hi, std::span<const std::uint64_t> b_lo,
                std::span<const std::uint64_t> b_hi, std::vector<std::uint32_t>& breaks) {
  const std::size_t n = b_lo.size();
  for (std::size_t j = 0; j + 1 < n; ++j) {
    if (u128(a_lo) * b_lo[j + 1] > u128(a_hi) * b_hi[j]) breaks.push_back(static_cast<std::uint32_t>(j));
  }
}

}  // namespace cantorprod::kernels::scalar
