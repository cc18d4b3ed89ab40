#include "pinless/simd.hpp"

namespace pinless::simd::scalar {

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
              std::uint32_t factor, std::uint32_t p) {
  const std::uint64_t f = factor;
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<std::uint32_t>((dst[i] + f * src[i]) % p);
  }
}

void scale_mod(std::uint32_t* dst, std::size_t n, std::uint32_t factor, std::uint32_t p) {
  const std::uint64_t f = factor;
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<std::uint32_t>((f * dst[i]) % p);
  }
}

}  // namespace pinless::simd::scalar
