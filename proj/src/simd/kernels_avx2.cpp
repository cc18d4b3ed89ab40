// Compiled with -mavx2; only reached after the dispatcher has confirmed
// CPU support.

#include <immintrin.h>

#include "pinless/simd.hpp"

namespace pinless::simd::avx2 {

namespace {

// High 32 bits of the 32x32 products of each lane with m.
inline __m256i mulhi_epu32(__m256i x, __m256i m) {
  const __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(x, m), 32);
  const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), _mm256_srli_epi64(m, 32));
  return _mm256_blend_epi32(even, odd, 0xAA);
}

// x mod p for x < 2^32 via Barrett with m = floor((2^32 - 1) / p); the
// quotient estimate is short by at most 2.
inline __m256i reduce(__m256i x, __m256i m, __m256i p) {
  const __m256i q = mulhi_epu32(x, m);
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, p));
  for (int k = 0; k < 2; ++k) {
    // r >= p  <=>  max(r, p) == r
    const __m256i ge = _mm256_cmpeq_epi32(_mm256_max_epu32(r, p), r);
    r = _mm256_sub_epi32(r, _mm256_and_si256(ge, p));
  }
  return r;
}

}  // namespace

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
              std::uint32_t factor, std::uint32_t p) {
  const __m256i vf = _mm256_set1_epi32(static_cast<int>(factor));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(0xFFFFFFFFu / p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    // factor, src < 2^16 so the product and the sum fit in 32 bits
    const __m256i x = _mm256_add_epi32(a, _mm256_mullo_epi32(b, vf));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce(x, vm, vp));
  }
  scalar::axpy_mod(dst + i, src + i, n - i, factor, p);
}

void scale_mod(std::uint32_t* dst, std::size_t n, std::uint32_t factor, std::uint32_t p) {
  const __m256i vf = _mm256_set1_epi32(static_cast<int>(factor));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(0xFFFFFFFFu / p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        reduce(_mm256_mullo_epi32(a, vf), vm, vp));
  }
  scalar::scale_mod(dst + i, n - i, factor, p);
}

}  // namespace pinless::simd::avx2
