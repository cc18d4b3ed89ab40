#pragma once

// Row kernels for exact elimination over F_2 and F_p.
//
// Every kernel has a scalar reference implementation; vectorized variants
// (AVX2 on x86-64, NEON on aarch64) are compiled in separate translation
// units and selected once at runtime. Setting PINLESS_SIMD=scalar in the
// environment pins the scalar path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace pinless::simd {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

/// The ISA the dispatched kernels currently use.
Isa active_isa();

/// Best ISA this binary and this CPU both support.
Isa detected_isa();

/// Overrides dispatch; requesting an unsupported ISA falls back to scalar.
/// Intended for equivalence tests and benchmarks.
void set_isa(Isa isa);

// Largest modulus the vectorized F_p kernels accept. Above it the dispatcher
// always takes the scalar path.
inline constexpr std::uint32_t kVectorModulusLimit = 1u << 16;

// dst ^= src
void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);

// dst[i] = (dst[i] + factor * src[i]) mod p; all inputs already reduced.
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p);

// dst[i] = dst[i] * factor mod p
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, std::uint32_t p);

namespace scalar {
void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
              std::uint32_t factor, std::uint32_t p);
void scale_mod(std::uint32_t* dst, std::size_t n, std::uint32_t factor, std::uint32_t p);
}  // namespace scalar

#if defined(PINLESS_HAVE_AVX2)
namespace avx2 {
void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
              std::uint32_t factor, std::uint32_t p);
void scale_mod(std::uint32_t* dst, std::size_t n, std::uint32_t factor, std::uint32_t p);
}  // namespace avx2
#endif

#if defined(PINLESS_HAVE_NEON)
namespace neon {
void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
              std::uint32_t factor, std::uint32_t p);
void scale_mod(std::uint32_t* dst, std::size_t n, std::uint32_t factor, std::uint32_t p);
}  // namespace neon
#endif

}  // namespace pinless::simd
