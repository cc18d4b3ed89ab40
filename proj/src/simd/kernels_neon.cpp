#include <arm_neon.h>

#include "pinless/simd.hpp"

namespace pinless::simd::neon {

namespace {

inline uint32x4_t reduce(uint32x4_t x, std::uint32_t m, uint32x4_t p) {
  const uint64x2_t lo = vmull_n_u32(vget_low_u32(x), m);
  const uint64x2_t hi = vmull_n_u32(vget_high_u32(x), m);
  const uint32x4_t q = vcombine_u32(vshrn_n_u64(lo, 32), vshrn_n_u64(hi, 32));
  uint32x4_t r = vmlsq_u32(x, q, p);
  for (int k = 0; k < 2; ++k) {
    r = vsubq_u32(r, vandq_u32(vcgeq_u32(r, p), p));
  }
  return r;
}

}  // namespace

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
              std::uint32_t factor, std::uint32_t p) {
  const uint32x4_t vp = vdupq_n_u32(p);
  const std::uint32_t m = 0xFFFFFFFFu / p;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const uint32x4_t x = vmlaq_n_u32(vld1q_u32(dst + i), vld1q_u32(src + i), factor);
    vst1q_u32(dst + i, reduce(x, m, vp));
  }
  scalar::axpy_mod(dst + i, src + i, n - i, factor, p);
}

void scale_mod(std::uint32_t* dst, std::size_t n, std::uint32_t factor, std::uint32_t p) {
  const uint32x4_t vp = vdupq_n_u32(p);
  const std::uint32_t m = 0xFFFFFFFFu / p;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    vst1q_u32(dst + i, reduce(vmulq_n_u32(vld1q_u32(dst + i), factor), m, vp));
  }
  scalar::scale_mod(dst + i, n - i, factor, p);
}

}  // namespace pinless::simd::neon
