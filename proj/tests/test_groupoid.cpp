#include <doctest.h>

#include "pinless/error.hpp"
#include "pinless/groupoid.hpp"

using namespace pinless;

namespace {

TwistedGroupoid sample() {
  const auto z4 = FiniteGroup::cyclic(4);
  return TwistedGroupoid(TwoCocycle::parse(z4, "[(1,3),(2,2),(2,3),(3,1),(3,2),(3,3)]"),
                         TwoCocycle::parse(FiniteGroup::cyclic(2), "[(1,1)]"));
}

}  // namespace

TEST_CASE("composition is associative and unital on all basis triples") {
  const auto g = sample();
  const std::size_t n = g.basis_size();
  const auto b = [&](std::size_t i) { return g.basis(0, 0, g.part0(i), g.part1(i)); };
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(g.compose(g.identity(0), b(i)) == b(i));
    CHECK(g.compose(b(i), g.identity(0)) == b(i));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        CHECK(g.compose(g.compose(b(i), b(j)), b(k)) == g.compose(b(i), g.compose(b(j), b(k))));
  }
}

TEST_CASE("signed basis morphisms are invertible") {
  const auto g = sample();
  for (std::size_t i = 0; i < g.basis_size(); ++i)
    for (int s : {1, -1}) {
      const auto f = g.basis(0, 0, g.part0(i), g.part1(i), s);
      const auto inv = g.invert(f);
      CHECK(g.compose(f, inv) == g.identity(0));
      CHECK(g.compose(inv, f) == g.identity(0));
    }
  const auto sum = g.add(g.identity(0), g.basis(0, 0, 1, 1));
  CHECK_THROWS_AS(g.invert(sum), StructuralError);
}

TEST_CASE("End(y_b) is the opposite of the first twisted ring tensor the second") {
  const auto w = endomorphism_ring(sample());
  CHECK(w.valid);
  CHECK(w.products_checked == 64);
}

TEST_CASE("objects are checked") {
  const TwistedGroupoid g(TwoCocycle(FiniteGroup::cyclic(2)), TwoCocycle(FiniteGroup::cyclic(2)), 2);
  CHECK_THROWS_AS(g.compose(g.identity(0), g.identity(1)), StructuralError);
  CHECK_THROWS_AS(g.identity(2), StructuralError);
}
