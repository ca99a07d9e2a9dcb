#pragma once

// Inner loop of the product-image sweep.
//
// For a fixed row interval [a_lo, a_hi] and a strictly increasing column
// sequence of intervals [b_lo[j], b_hi[j]] (all numerators over a common
// denominator), the row products [a_lo*b_lo[j], a_hi*b_hi[j]] have monotone
// endpoints, so consecutive products are disjoint exactly when
//
//     a_lo * b_lo[j+1] > a_hi * b_hi[j].
//
// Every kernel reports those break positions j. The scalar kernel is the
// reference; the AVX2 kernels must agree with it bit for bit.

#include <cstdint>
#include <span>
#include <vector>

namespace cantorprod::kernels {

enum class Backend { scalar, avx2 };

/// Operand width class. Narrow: all numerators < 2^31, so products fit in 62
/// bits. Wide: all numerators < 2^62, products need up to 124 bits.
enum class Width { narrow, wide };

inline constexpr std::uint64_t kNarrowLimit = std::uint64_t{1} << 31;
inline constexpr std::uint64_t kWideLimit = std::uint64_t{1} << 62;

bool avx2_available();

/// Best backend for this CPU. CANTORPROD_BACKEND=scalar forces the reference.
Backend default_backend();

const char* backend_name(Backend b);

void row_breaks(Backend backend, Width width, std::uint64_t a_lo, std::uint64_t a_hi,
                std::span<const std::uint64_t> b_lo, std::span<const std::uint64_t> b_hi,
                std::vector<std::uint32_t>& breaks);

namespace scalar {
void row_breaks(std::uint64_t a_lo, std::uint64_t a_hi, std::span<const std::uint64_t> b_lo,
                std::span<const std::uint64_t> b_hi, std::vector<std::uint32_t>& breaks);
}

namespace avx2 {
void row_breaks_narrow(std::uint64_t a_lo, std::uint64_t a_hi, std::span<const std::uint64_t> b_lo,
                       std::span<const std::uint64_t> b_hi, std::vector<std::uint32_t>& breaks);
void row_breaks_wide(std::uint64_t a_lo, std::uint64_t a_hi, std::span<const std::uint64_t> b_lo,
                     std::span<const std::uint64_t> b_hi, std::vector<std::uint32_t>& breaks);
}  // namespace avx2

}  // namespace cantorprod::kernels
