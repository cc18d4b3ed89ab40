#include <doctest.h>

#include <random>
#include <vector>

#include "pinless/linalg.hpp"
#include "pinless/simd.hpp"

using namespace pinless;

namespace {

std::vector<simd::Isa> available() {
  std::vector<simd::Isa> out{simd::Isa::Scalar};
  if (simd::detected_isa() != simd::Isa::Scalar) out.push_back(simd::detected_isa());
  return out;
}

struct IsaGuard {
  simd::Isa saved = simd::active_isa();
  ~IsaGuard() { simd::set_isa(saved); }
};

}  // namespace

TEST_CASE("dispatched kernels match the scalar reference") {
  IsaGuard guard;
  std::mt19937_64 rng(7);
  for (auto isa : available()) {
    simd::set_isa(isa);
    CAPTURE(simd::isa_name(isa));
    for (std::size_t n : {0u, 1u, 3u, 7u, 8u, 9u, 31u, 64u, 129u}) {
      std::vector<std::uint64_t> a(n), b(n);
      for (auto& x : a) x = rng();
      for (auto& x : b) x = rng();
      auto ref = a;
      simd::scalar::xor_words(ref.data(), b.data(), n);
      simd::xor_words(a, b);
      CHECK(a == ref);

      for (std::uint32_t p : {2u, 3u, 5u, 13u, 251u, 65521u, 65537u, 2147483647u}) {
        std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
        std::vector<std::uint32_t> x(n), y(n);
        for (auto& v : x) v = d(rng);
        for (auto& v : y) v = d(rng);
        const std::uint32_t f = d(rng);
        auto rx = x;
        simd::scalar::axpy_mod(rx.data(), y.data(), n, f, p);
        simd::axpy_mod(x, y, f, p);
        CHECK(x == rx);
        simd::scalar::scale_mod(rx.data(), n, f, p);
        simd::scale_mod(x, f, p);
        CHECK(x == rx);
      }
    }
  }
}

TEST_CASE("elimination results do not depend on the ISA") {
  IsaGuard guard;
  std::mt19937_64 rng(11);
  for (auto spec : {"gf(2)", "gf(5)", "gf(9)", "gf(65521)"}) {
    const auto k = Field::parse(spec);
    std::uniform_int_distribution<std::uint32_t> d(0, k.order() - 1);
    FieldMatrix m(k, 23, 41);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (rng() % 3 == 0) m.set(r, c, {d(rng)});
    simd::set_isa(simd::Isa::Scalar);
    const auto ref = rref(m);
    simd::set_isa(simd::detected_isa());
    const auto got = rref(m);
    CHECK(got.reduced == ref.reduced);
    CHECK(got.pivots == ref.pivots);
  }
}
