#include <doctest.h>

#include <random>

#include "pinless/clifford.hpp"
#include "pinless/error.hpp"

using namespace pinless;

namespace {

RationalVector random_unit(unsigned n, std::mt19937_64& rng) {
  RationalVector t(n - 1);
  for (auto& x : t) x = Rational(static_cast<long long>(rng() % 11) - 5, 1 + static_cast<long long>(rng() % 4));
  return stereographic_unit_vector(t);
}

}  // namespace

TEST_CASE("blade products satisfy the Clifford relation") {
  for (auto sigma : {CliffordSign::Plus, CliffordSign::Minus}) {
    const int sq = sigma == CliffordSign::Plus ? 1 : -1;
    for (std::uint32_t i = 0; i < 4; ++i) {
      CHECK(blade_product(1u << i, 1u << i, sigma) == std::pair<int, std::uint32_t>{sq, 0});
      for (std::uint32_t j = i + 1; j < 4; ++j) {
        const auto a = blade_product(1u << i, 1u << j, sigma);
        const auto b = blade_product(1u << j, 1u << i, sigma);
        CHECK(a.second == b.second);
        CHECK(a.first == -b.first);
      }
    }
  }
}

TEST_CASE("stereographic vectors are unit vectors") {
  std::mt19937_64 rng(2);
  for (unsigned n = 1; n <= 4; ++n)
    for (int i = 0; i < 20; ++i) {
      const auto v = random_unit(n, rng);
      CHECK(inner(v, v) == 1);
    }
}

TEST_CASE("Pin elements act by isometries, exactly") {
  std::mt19937_64 rng(4);
  for (auto sigma : {CliffordSign::Plus, CliffordSign::Minus})
    for (int trial = 0; trial < 100; ++trial) {
      const unsigned n = 1 + trial % 4;
      std::vector<RationalVector> factors;
      for (unsigned k = 0; k < 1 + rng() % 3; ++k) factors.push_back(random_unit(n, rng));
      const PinElement x(n, sigma, factors);
      const auto a = random_unit(n, rng), b = random_unit(n, rng);
      CHECK(inner(pin_action(x, a), pin_action(x, b)) == inner(a, b));
    }
}

TEST_CASE("a single factor acts as a reflection") {
  for (auto sigma : {CliffordSign::Plus, CliffordSign::Minus}) {
    const PinElement x(3, sigma, {{1, 0, 0}});
    CHECK(pin_action(x, {1, 0, 0}) == RationalVector{-1, 0, 0});
    CHECK(pin_action(x, {0, 2, 3}) == RationalVector{0, 2, 3});
  }
}

TEST_CASE("projection to O(n) is two-to-one") {
  for (unsigned n = 1; n <= 3; ++n)
    for (auto sigma : {CliffordSign::Plus, CliffordSign::Minus}) CHECK(verify_two_to_one(n, sigma));
}

TEST_CASE("the preimage of a reflection group distinguishes the conventions") {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto minus = reflection_preimage_group(n, CliffordSign::Minus);
    const auto plus = reflection_preimage_group(n, CliffordSign::Plus);
    CHECK(minus.type == PreimageGroup::Z4);
    CHECK(minus.order_of_e1 == 4);
    CHECK(plus.type == PreimageGroup::KleinFour);
    CHECK(plus.order_of_e1 == 2);
  }
}

TEST_CASE("non-unit factors are rejected") {
  CHECK_THROWS_AS(PinElement(2, CliffordSign::Plus, {{1, 1}}), StructuralError);
  CHECK_THROWS_AS(PinElement(2, CliffordSign::Plus, {{1, 0, 0}}), StructuralError);
}

TEST_CASE("relative Pin torsors glue associatively") {
  const TorsorElement a{"p", "q", false}, b{"q", "r", true}, c{"r", "s", true};
  CHECK(glue_torsors(glue_torsors(a, b), c) == glue_torsors(a, glue_torsors(b, c)));
  CHECK(glue_torsors(unit_torsor("p"), a) == a);
  CHECK(glue_torsors(a, unit_torsor("q", true)) == flip(a));
  CHECK(orientation_line_sign(flip(a)) == -orientation_line_sign(a));
  CHECK_THROWS_AS(glue_torsors(a, c), StructuralError);
}
