#include <atomic>
#include <cstdlib>
#include <cstring>

#include "pinless/simd.hpp"

namespace pinless::simd {

namespace {

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(PINLESS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(PINLESS_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa initial_isa() {
  if (const char* env = std::getenv("PINLESS_SIMD"); env && std::strcmp(env, "scalar") == 0) {
    return Isa::Scalar;
  }
  return detected_isa();
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

Isa detected_isa() {
  if (cpu_supports(Isa::Avx2)) return Isa::Avx2;
  if (cpu_supports(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  current().store(cpu_supports(isa) ? isa : Isa::Scalar, std::memory_order_relaxed);
}

void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  const std::size_t n = dst.size() < src.size() ? dst.size() : src.size();
  switch (active_isa()) {
#if defined(PINLESS_HAVE_AVX2)
    case Isa::Avx2: return avx2::xor_words(dst.data(), src.data(), n);
#endif
#if defined(PINLESS_HAVE_NEON)
    case Isa::Neon: return neon::xor_words(dst.data(), src.data(), n);
#endif
    default: return scalar::xor_words(dst.data(), src.data(), n);
  }
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p) {
  const std::size_t n = dst.size() < src.size() ? dst.size() : src.size();
  if (p < kVectorModulusLimit) {
    switch (active_isa()) {
#if defined(PINLESS_HAVE_AVX2)
      case Isa::Avx2: return avx2::axpy_mod(dst.data(), src.data(), n, factor, p);
#endif
#if defined(PINLESS_HAVE_NEON)
      case Isa::Neon: return neon::axpy_mod(dst.data(), src.data(), n, factor, p);
#endif
      default: break;
    }
  }
  scalar::axpy_mod(dst.data(), src.data(), n, factor, p);
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, std::uint32_t p) {
  if (p < kVectorModulusLimit) {
    switch (active_isa()) {
#if defined(PINLESS_HAVE_AVX2)
      case Isa::Avx2: return avx2::scale_mod(dst.data(), dst.size(), factor, p);
#endif
#if defined(PINLESS_HAVE_NEON)
      case Isa::Neon: return neon::scale_mod(dst.data(), dst.size(), factor, p);
#endif
      default: break;
    }
  }
  scalar::scale_mod(dst.data(), dst.size(), factor, p);
}

}  // namespace pinless::simd
