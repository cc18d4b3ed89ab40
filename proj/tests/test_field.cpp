#include <doctest.h>

#include <random>

#include "pinless/error.hpp"
#include "pinless/field.hpp"
#include "pinless/linalg.hpp"

using namespace pinless;

TEST_CASE("field axioms hold exhaustively on small fields") {
  for (auto spec : {"gf(2)", "gf(3)", "gf(5)", "gf(4)", "gf(9)", "gf(25)"}) {
    const auto k = Field::parse(spec);
    CAPTURE(spec);
    const auto all = k.elements();
    REQUIRE(all.size() == k.order());
    for (auto x : all) {
      CHECK(k.add(x, k.neg(x)) == k.zero());
      CHECK(k.mul(x, k.one()) == x);
      if (!k.is_zero(x)) CHECK(k.mul(x, k.inv(x)) == k.one());
      for (auto y : all) {
        CHECK(k.mul(x, y) == k.mul(y, x));
        for (auto z : all) CHECK(k.mul(x, k.add(y, z)) == k.add(k.mul(x, y), k.mul(x, z)));
      }
    }
  }
}

TEST_CASE("F_9 is F_3[t]/(t^2+1)") {
  const auto k = Field::parse("gf(9)");
  const auto t = k.generator_t();
  CHECK(k.mul(t, t) == k.from_int(-1));
  CHECK(k.is_square(k.from_int(-1)));
  CHECK_FALSE(Field::parse("gf(3)").is_square(Field::parse("gf(3)").from_int(-1)));
}

TEST_CASE("field spec errors") {
  CHECK_THROWS_AS(Field::parse("gf(6)"), StructuralError);
  CHECK_THROWS_AS(Field::parse("gf(8)"), StructuralError);
  CHECK_THROWS_AS(Field::parse("gf(5"), ParseError);
  CHECK_THROWS_AS(Field::parse("q(5)"), ParseError);
}

TEST_CASE("rank-nullity and solve on random matrices") {
  std::mt19937_64 rng(3);
  for (auto spec : {"gf(2)", "gf(3)", "gf(13)", "gf(9)"}) {
    const auto k = Field::parse(spec);
    std::uniform_int_distribution<std::uint32_t> d(0, k.order() - 1);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
      FieldMatrix m(k, rows, cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, {d(rng)});
      const auto ns = nullspace(m);
      CHECK(rank(m) + ns.size() == cols);
      for (const auto& v : ns) {
        FieldMatrix col(k, cols, 1);
        for (std::size_t c = 0; c < cols; ++c) col.set(c, 0, v[c]);
        CHECK((m * col).is_zero());
      }
      // b in the image is always solvable
      std::vector<FieldElement> x(cols), b(rows, k.zero());
      for (auto& v : x) v = {d(rng)};
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) b[r] = k.add(b[r], k.mul(m.at(r, c), x[c]));
      const auto sol = solve(m, b);
      REQUIRE(sol.has_value());
      for (std::size_t r = 0; r < rows; ++r) {
        FieldElement s = k.zero();
        for (std::size_t c = 0; c < cols; ++c) s = k.add(s, k.mul(m.at(r, c), (*sol)[c]));
        CHECK(s == b[r]);
      }
      CHECK(rank(m.transpose()) == rank(m));
    }
  }
}

TEST_CASE("F2Echelon agrees with generic elimination over F_2") {
  std::mt19937_64 rng(5);
  const auto f2 = Field::prime(2);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 1 + rng() % 20, cols = 1 + rng() % 90;
    FieldMatrix m(f2, rows, cols);
    F2Echelon e(cols, true);
    std::vector<BitVector> vs;
    for (std::size_t r = 0; r < rows; ++r) {
      BitVector v(bit_words(cols), 0);
      for (std::size_t c = 0; c < cols; ++c)
        if (rng() % 2) {
          m.set(r, c, f2.one());
          set_bit(v, c, true);
        }
      vs.push_back(v);
      e.insert(v);
    }
    CHECK(e.rank() == rank(m));
    CHECK(e.nullspace().size() == cols - e.rank());
    for (const auto& v : vs) CHECK(e.contains(v));
    // a sum of inserted rows is found again by f2_solve
    BitVector target(bit_words(cols), 0);
    for (std::size_t r = 0; r < rows; r += 2)
      for (std::size_t w = 0; w < target.size(); ++w) target[w] ^= vs[r][w];
    CHECK(f2_solve(vs, target, cols).has_value());
  }
}
