#include <doctest.h>

#include <random>
#include <set>

#include "pinless/error.hpp"
#include "pinless/twisted.hpp"

using namespace pinless;

namespace {

TwoCocycle rp2_cocycle() { return TwoCocycle::parse(FiniteGroup::cyclic(2), "[(1,1)]"); }

// Every map G -> k that is a unital ring homomorphism on the twisted basis.
std::set<std::vector<FieldElement>> brute_force_augmentations(const TwoCocycle& mu, const Field& k) {
  const auto& g = mu.group();
  const std::size_t n = g.size();
  const auto all = k.elements();
  std::set<std::vector<FieldElement>> out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<FieldElement> eps(n);
    for (std::size_t i = 0; i < n; ++i) eps[i] = all[idx[i]];
    bool ok = eps[g.identity()] == k.one();
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) {
        auto rhs = eps[g.mul(a, b)];
        if (mu(a, b)) rhs = k.neg(rhs);
        ok = k.mul(eps[a], eps[b]) == rhs;
      }
    if (ok) out.insert(eps);
    std::size_t i = 0;
    while (i < n && ++idx[i] == all.size()) idx[i++] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace

TEST_CASE("Z[Z/2]^tw with the nontrivial cocycle is Z[i]") {
  const TwistedRing ring(rp2_cocycle());
  const auto iso = check_gaussian_isomorphism(ring);
  CHECK(iso.isomorphic);
  REQUIRE(iso.witness.size() == 2);
  CHECK(iso.witness[1] == std::pair<std::int64_t, std::int64_t>{0, 1});
  const auto x = TwistedRingElement::basis(ring, 1);
  CHECK(twisted_mul(x, x) == twisted_neg(TwistedRingElement::one(ring)));

  const TwistedRing plain(TwoCocycle(FiniteGroup::cyclic(2)));
  CHECK_FALSE(check_gaussian_isomorphism(plain).isomorphic);
  CHECK_THROWS_AS(check_gaussian_isomorphism(TwistedRing(TwoCocycle(FiniteGroup::cyclic(3)))), UnsupportedError);
}

TEST_CASE("augmentation census matches exhaustive search") {
  const auto klein = FiniteGroup::parse("prod(z(2),z(2))");
  const std::vector<TwoCocycle> cocycles{
      rp2_cocycle(), TwoCocycle(FiniteGroup::cyclic(3)),
      TwoCocycle::parse(FiniteGroup::cyclic(4), "[(1,3),(2,2),(2,3),(3,1),(3,2),(3,3)]"),
      TwoCocycle::parse(klein, "[((1,0),(0,1)),((1,0),(1,1)),((1,1),(0,1)),((1,1),(1,1))]"),
      TwoCocycle::parse(klein, "[((1,0),(1,0)),((1,0),(1,1)),((1,1),(1,0)),((1,1),(1,1))]")};
  for (const auto& mu : cocycles) {
    REQUIRE(validate_cocycle(mu));
    for (auto spec : {"gf(2)", "gf(3)", "gf(5)", "gf(9)", "gf(13)", "gf(25)"}) {
      const auto k = Field::parse(spec);
      CAPTURE(mu.to_string());
      CAPTURE(spec);
      std::set<std::vector<FieldElement>> found;
      for (const auto& eps : enumerate_augmentations(TwistedRing(mu), k)) {
        CHECK(eps.satisfies_invariant());
        found.insert(eps.images);
      }
      CHECK(found == brute_force_augmentations(mu, k));
    }
  }
}

TEST_CASE("RP^2 augmentations exist exactly when -1 is a square") {
  const TwistedRing ring(rp2_cocycle());
  const auto f5 = Field::parse("gf(5)");
  const auto a5 = enumerate_augmentations(ring, f5);
  REQUIRE(a5.size() == 2);
  CHECK(a5[0].images[1] == f5.from_int(2));
  CHECK(a5[1].images[1] == f5.from_int(3));
  const auto f13 = Field::parse("gf(13)");
  const auto a13 = enumerate_augmentations(ring, f13);
  REQUIRE(a13.size() == 2);
  CHECK(a13[0].images[1] == f13.from_int(5));
  CHECK(a13[1].images[1] == f13.from_int(8));
  CHECK(enumerate_augmentations(ring, Field::parse("gf(3)")).empty());
  CHECK(enumerate_augmentations(ring, Field::parse("gf(9)")).size() == 2);
  CHECK(enumerate_augmentations(ring, Field::parse("gf(7)")).empty());
}

TEST_CASE("twisted multiplication is unital and associative for cocycles only") {
  CHECK(twisted_product_is_unital_associative(rp2_cocycle()));
  const auto bad = TwoCocycle::parse(FiniteGroup::cyclic(3), "[(1,1)]");
  CHECK_FALSE(twisted_product_is_unital_associative(bad));
  CHECK_THROWS_AS(TwistedRing{bad}, StructuralError);

  std::mt19937_64 rng(1);
  const auto mu = TwoCocycle::parse(FiniteGroup::cyclic(4), "[(1,3),(2,2),(2,3),(3,1),(3,2),(3,3)]");
  const TwistedRing ring(mu);
  const auto random = [&] {
    auto x = TwistedRingElement::zero(ring);
    for (auto& c : x.coeffs) c = static_cast<std::int64_t>(rng() % 7) - 3;
    return x;
  };
  for (int i = 0; i < 50; ++i) {
    const auto a = random(), b = random(), c = random();
    CHECK(twisted_mul(twisted_mul(a, b), c) == twisted_mul(a, twisted_mul(b, c)));
    CHECK(twisted_mul(a, twisted_add(b, c)) == twisted_add(twisted_mul(a, b), twisted_mul(a, c)));
  }
}

TEST_CASE("Delta conventions") {
  const TwistedRing ring(rp2_cocycle());
  const auto k = Field::parse("gf(5)");
  for (const auto& eps : enumerate_augmentations(ring, k)) {
    const auto dbl = delta_monodromy(eps, DeltaConvention::Double);
    const auto inv = delta_monodromy(eps, DeltaConvention::Inverse);
    for (GroupIndex g = 0; g < 2; ++g) {
      CHECK(dbl.value(g) == k.mul(eps.images[g], eps.images[g]));
      CHECK(inv.value(g) == k.one());
    }
    CHECK(dbl.value(1) == k.from_int(-1));
  }
  CHECK(parse_delta("inverse") == DeltaConvention::Inverse);
  CHECK(parse_delta("DOUBLE") == DeltaConvention::Double);
  CHECK_THROWS_AS(parse_delta("triple"), ParseError);
}

TEST_CASE("re-identifying a basis sign moves the cocycle by a coboundary") {
  const auto mu = TwoCocycle::parse(FiniteGroup::cyclic(4), "[(1,3),(2,2),(2,3),(3,1),(3,2),(3,3)]");
  const auto k = Field::parse("gf(13)");
  for (const auto& eps : enumerate_augmentations(TwistedRing(mu), k)) {
    for (GroupIndex g = 1; g < 4; ++g) {
      const auto flipped = flip_basis_sign(eps, g);
      CHECK(flipped.satisfies_invariant());
      CHECK(are_cohomologous(flipped.ring.cocycle(), mu).has_value());
      CHECK(flipped.images[g] == k.neg(eps.images[g]));
      CHECK(delta_monodromy(flipped, DeltaConvention::Double) == delta_monodromy(eps, DeltaConvention::Double));
    }
  }
}

TEST_CASE("local systems validate the homomorphism law") {
  const auto g = FiniteGroup::cyclic(4);
  const auto k = Field::parse("gf(5)");
  const auto rho = LocalSystem::from_values(g, k, {{1, k.from_int(2)}});
  CHECK(rho.value(2) == k.from_int(4));
  CHECK(rho.value(3) == k.from_int(3));
  CHECK_THROWS_AS(LocalSystem::from_values(g, k, {{1, k.from_int(4)}, {2, k.from_int(2)}}), ValidationError);
  CHECK_THROWS_AS(LocalSystem::character(g, k, {k.one(), k.from_int(2), k.one(), k.one()}), ValidationError);
  CHECK(LocalSystem::trivial(g, k).rank() == 1);
}

TEST_CASE("product cocycles are cocycles") {
  const auto mu = product_cocycle(rp2_cocycle(), TwoCocycle(FiniteGroup::cyclic(5)));
  CHECK(validate_cocycle(mu));
  CHECK(mu.group().size() == 10);
}
