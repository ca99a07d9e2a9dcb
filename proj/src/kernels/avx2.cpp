#include "cantorprod/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace cantorprod::kernels::avx2 {

#if defined(__AVX2__)

namespace {

inline void push_mask(int mask, std::size_t j, std::vector<std::uint32_t>& breaks) {
  while (mask != 0) {
    const int bit = __builtin_ctz(static_cast<unsigned>(mask));
    breaks.push_back(static_cast<std::uint32_t>(j + static_cast<std::size_t>(bit)));
    mask &= mask - 1;
  }
}

struct Wide {
  __m256i hi;
  __m256i lo;
};

const __m256i kSign = _mm256_set1_epi64x(static_cast<long long>(0x8000000000000000ULL));

// Full 128-bit product of a (split into 32-bit halves, broadcast) and each
// 64-bit lane of b. Operands are below 2^62, so the middle sum cannot overflow.
inline Wide mul_wide(__m256i a_lo32, __m256i a_hi32, __m256i b) {
  const __m256i b_hi32 = _mm256_srli_epi64(b, 32);
  const __m256i ll = _mm256_mul_epu32(a_lo32, b);
  const __m256i mid = _mm256_add_epi64(_mm256_mul_epu32(a_hi32, b), _mm256_mul_epu32(a_lo32, b_hi32));
  const __m256i hh = _mm256_mul_epu32(a_hi32, b_hi32);
  const __m256i lo = _mm256_add_epi64(ll, _mm256_slli_epi64(mid, 32));
  const __m256i carry = _mm256_cmpgt_epi64(_mm256_xor_si256(ll, kSign), _mm256_xor_si256(lo, kSign));
  const __m256i hi = _mm256_sub_epi64(_mm256_add_epi64(hh, _mm256_srli_epi64(mid, 32)), carry);
  return {hi, lo};
}

inline __m256i greater_wide(const Wide& x, const Wide& y) {
  const __m256i gt_hi = _mm256_cmpgt_epi64(x.hi, y.hi);
  const __m256i eq_hi = _mm256_cmpeq_epi64(x.hi, y.hi);
  const __m256i gt_lo = _mm256_cmpgt_epi64(_mm256_xor_si256(x.lo, kSign), _mm256_xor_si256(y.lo, kSign));
  return _mm256_or_si256(gt_hi, _mm256_and_si256(eq_hi, gt_lo));
}

}  // namespace

void row_breaks_narrow(std::uint64_t a_lo, std::uint64_t a_hi, std::span<const std::uint64_t> b_lo,
                       std::span<const std::uint64_t> b_hi, std::vector<std::uint32_t>& breaks) {
  const std::size_t n = b_lo.size();
  const __m256i av_lo = _mm256_set1_epi64x(static_cast<long long>(a_lo));
  const __m256i av_hi = _mm256_set1_epi64x(static_cast<long long>(a_hi));
  std::size_t j = 0;
  for (; j + 4 < n; j += 4) {
    const __m256i next_lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b_lo.data() + j + 1));
    const __m256i cur_hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b_hi.data() + j));
    const __m256i left = _mm256_mul_epu32(av_lo, next_lo);
    const __m256i right = _mm256_mul_epu32(av_hi, cur_hi);
    push_mask(_mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpgt_epi64(left, right))), j, breaks);
  }
  for (; j + 1 < n; ++j)
    if (a_lo * b_lo[j + 1] > a_hi * b_hi[j]) breaks.push_back(static_cast<std::uint32_t>(j));
}

void row_breaks_wide(std::uint64_t a_lo, std::uint64_t a_hi, std::span<const std::uint64_t> b_lo,
                     std::span<const std::uint64_t> b_hi, std::vector<std::uint32_t>& breaks) {
  const std::size_t n = b_lo.size();
  const __m256i alo_lo32 = _mm256_set1_epi64x(static_cast<long long>(a_lo & 0xffffffffULL));
  const __m256i alo_hi32 = _mm256_set1_epi64x(static_cast<long long>(a_lo >> 32));
  const __m256i ahi_lo32 = _mm256_set1_epi64x(static_cast<long long>(a_hi & 0xffffffffULL));
  const __m256i ahi_hi32 = _mm256_set1_epi64x(static_cast<long long>(a_hi >> 32));
  std::size_t j = 0;
  for (; j + 4 < n; j += 4) {
    const __m256i next_lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b_lo.data() + j + 1));
    const __m256i cur_hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b_hi.data() + j));
    const Wide left = mul_wide(alo_lo32, alo_hi32, next_lo);
    const Wide right = mul_wide(ahi_lo32, ahi_hi32, cur_hi);
    push_mask(_mm256_movemask_pd(_mm256_castsi256_pd(greater_wide(left, right))), j, breaks);
  }
  using u128 = unsigned __int128;
  for (; j + 1 < n; ++j)
    if (u128(a_lo) * b_lo[j + 1] > u128(a_hi) * b_hi[j]) breaks.push_back(static_cast<std::uint32_t>(j));
}

#else

void row_breaks_narrow(std::uint64_t a_lo, std::uint64_t a_hi, std::span<const std::uint64_t> b_lo,
                       std::span<const std::uint64_t> b_hi, std::vector<std::uint32_t>& breaks) {
  scalar::row_breaks(a_lo, a_hi, b_lo, b_hi, breaks);
}

void row_breaks_wide(std::uint64_t a_lo, std::uint64_t a_hi, std::span<const std::uint64_t> b_lo,
                     std::span<const std::uint64_t> b_hi, std::vector<std::uint32_t>& breaks) {
  scalar::row_breaks(a_lo, a_hi, b_lo, b_hi, breaks);
}

#endif

}  // namespace cantorprod::kernels::avx2
