#include <doctest.h>

#include <algorithm>
#include <map>

#include "pinless/error.hpp"
#include "pinless/spaces.hpp"

using namespace pinless;

namespace {

std::vector<std::size_t> dims(std::string_view space, const char* field) {
  return homology_dims(specialize_trivial(build(space), Field::parse(field))).ranks;
}

std::vector<std::size_t> twisted_dims(std::string_view space, const char* field,
                                      const std::map<GroupIndex, FieldElement>& values) {
  const auto c = build(space);
  const auto k = Field::parse(field);
  return homology_dims(specialize(c, LocalSystem::from_values(c.group, k, values))).ranks;
}

using V = std::vector<std::size_t>;

}  // namespace

TEST_CASE("RP^2") {
  CHECK(dims("rp(2)", "gf(2)") == V{1, 1, 1});
  CHECK(dims("rp(2)", "gf(5)") == V{1, 0, 0});
  const auto f5 = Field::parse("gf(5)");
  CHECK(twisted_dims("rp(2)", "gf(5)", {{1, f5.from_int(-1)}}) == V{0, 0, 1});
  CHECK(integral_homology(trivialize(build("rp(2)"))).to_string() == "(Z, Z/2, 0)");
}

TEST_CASE("projective spaces and spheres") {
  CHECK(dims("rp(3)", "gf(2)") == V{1, 1, 1, 1});
  CHECK(dims("rp(3)", "gf(3)") == V{1, 0, 0, 1});
  CHECK(integral_homology(trivialize(build("rp(4)"))).to_string() == "(Z, Z/2, 0, Z/2, 0)");
  CHECK(dims("sphere(2)", "gf(5)") == V{1, 0, 1});
  CHECK_THROWS(build("sphere(0)"));
  CHECK(dims("cp2", "gf(7)") == V{1, 0, 1, 0, 1});
}

TEST_CASE("lens spaces") {
  CHECK(integral_homology(trivialize(build("lens(5,3)"))).to_string() == "(Z, Z/5, 0, Z)");
  CHECK(dims("lens(5,3)", "gf(5)") == V{1, 1, 1, 1});
  CHECK(dims("lens(5,3)", "gf(2)") == V{1, 0, 0, 1});
  CHECK(dims("lens(7,5)", "gf(7)") == V{1, 1, 1, 1, 1, 1});
  CHECK(dims("lens(2,3)", "gf(2)") == dims("rp(3)", "gf(2)"));
  // a nontrivial character of Z/5 into F_11 kills everything
  const auto f11 = Field::parse("gf(11)");
  CHECK(twisted_dims("lens(5,3)", "gf(11)", {{1, f11.from_int(3)}}) == V{0, 0, 0, 0});
}

TEST_CASE("tori") {
  CHECK(dims("torus(2)", "gf(5)") == V{1, 2, 1});
  CHECK(dims("torus(3)", "gf(3)") == V{1, 3, 3, 1});
  CHECK(dims("torus(1,5)", "gf(7)") == V{1, 1});
  const auto c = build("torus(2)");
  CHECK(c.group.size() == 4);
  CHECK_FALSE(c.notes.empty());
  const auto f5 = Field::parse("gf(5)");
  CHECK(twisted_dims("torus(2)", "gf(5)", {{c.group.element("(1,0)"), f5.from_int(-1)},
                                            {c.group.element("(0,1)"), f5.one()}}) == V{0, 0, 0});
}

TEST_CASE("connected sums") {
  CHECK(dims("connsum(lens(5,3),lens(5,3))", "gf(5)") == V{1, 2, 2, 1});
  CHECK(dims("connsum(lens(5,3),connsum(lens(5,3),lens(5,3)))", "gf(2)") == V{1, 0, 0, 1});
  CHECK(dims("connsum_power(lens(5,3),4)", "gf(5)") == V{1, 4, 4, 1});
  const auto k = Field::parse("gf(5)");
  CHECK(connected_sum_homology(build("lens(5,3)"), build("torus(3)"), k).ranks == V{1, 4, 4, 1});
  CHECK_THROWS_AS(build("connsum(rp(2),rp(2))"), UnsupportedError);
  CHECK_THROWS_AS(build("connsum(sphere(3),sphere(4))"), UnsupportedError);
}

TEST_CASE("products follow Kunneth") {
  for (auto [a, b] : {std::pair{"rp(2)", "lens(5,3)"}, std::pair{"sphere(2)", "torus(2)"},
                      std::pair{"rp(2)", "connsum(lens(5,3),lens(5,3))"}}) {
    const auto k = Field::parse("gf(5)");
    const auto pa = homology_dims(specialize_trivial(build(a), k));
    const auto pb = homology_dims(specialize_trivial(build(b), k));
    const auto prod = homology_dims(specialize_trivial(build(std::string("product(") + a + "," + b + ")"), k));
    CHECK(prod == kunneth(pa, pb));
  }
}

TEST_CASE("Poincare duality on closed orientable built-ins") {
  for (auto space : {"sphere(3)", "rp(3)", "lens(5,3)", "lens(3,5)", "torus(2)", "torus(3)", "cp2",
                     "connsum(lens(5,3),lens(5,3))", "product(sphere(2),lens(5,3))", "product(rp(3),torus(1))"}) {
    CAPTURE(space);
    REQUIRE(build(space).orientable);
    for (auto field : {"gf(2)", "gf(5)", "gf(9)"}) {
      const auto d = dims(space, field);
      CHECK(std::equal(d.begin(), d.end(), d.rbegin()));
    }
  }
  CHECK_FALSE(build("rp(2)").orientable);
}

TEST_CASE("Euler characteristic is the alternating cell count for rank-1 systems") {
  for (auto space : {"rp(2)", "rp(4)", "lens(5,3)", "torus(2)", "product(rp(2),lens(5,3))"}) {
    const auto c = build(space);
    const auto k = Field::parse("gf(5)");
    for (const auto& eps : enumerate_augmentations(TwistedRing(c.mu), k))
      for (auto conv : {DeltaConvention::Double, DeltaConvention::Inverse}) {
        const auto p = homology_dims(specialize(c, delta_monodromy(eps, conv)));
        CHECK(euler_characteristic(p) == euler_characteristic(c.cells));
      }
  }
}

TEST_CASE("torsion-lift test for w2") {
  CHECK(torsion_lift_test(build("rp(2)")));
  CHECK(torsion_lift_test(build("sphere(2)")));
  CHECK(torsion_lift_test(build("lens(5,3)")));
  CHECK(torsion_lift_test(build("torus(2)")));
  CHECK(torsion_lift_test(build("rp(3)")));
  CHECK_FALSE(torsion_lift_test(build("cp2")));
  const auto c = build("rp(4)");
  CHECK(torsion_lift_test(c));
  CHECK_THROWS_AS(torsion_lift_test(c, CellCochain::unknown()), ValidationError);
}

TEST_CASE("space grammar errors") {
  CHECK_THROWS_AS(build("rp(2"), ParseError);
  CHECK_THROWS_AS(build("klein"), ParseError);
  CHECK_THROWS_AS(build("connsum_power(lens(5,3),0)"), ParseError);
}

TEST_CASE("validate_complex catches d^2 != 0") {
  auto c = build("rp(2)");
  c.boundary[2][0][0][1] = -c.boundary[2][0][0][1];
  CHECK_THROWS_AS(validate_complex(c), ValidationError);
}
