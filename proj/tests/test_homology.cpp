#include <doctest.h>

#include <random>

#include <boost/integer/common_factor.hpp>

#include "pinless/homology.hpp"

using namespace pinless;

namespace {

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range) {
  IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = static_cast<long long>(rng() % (2 * range + 1)) - range;
  return m;
}

// gcd of all k x k minors, by enumeration of row and column subsets
BigInt minor_gcd(const IntegerMatrix& m, std::size_t k) {
  BigInt g = 0;
  const std::size_t R = m.rows(), C = m.cols();
  for (std::uint32_t rs = 0; rs < (1u << R); ++rs) {
    if (static_cast<std::size_t>(__builtin_popcount(rs)) != k) continue;
    for (std::uint32_t cs = 0; cs < (1u << C); ++cs) {
      if (static_cast<std::size_t>(__builtin_popcount(cs)) != k) continue;
      IntegerMatrix sub(k, k);
      std::size_t i = 0;
      for (std::size_t r = 0; r < R; ++r) {
        if (!(rs >> r & 1u)) continue;
        std::size_t j = 0;
        for (std::size_t c = 0; c < C; ++c)
          if (cs >> c & 1u) sub.at(i, j++) = m.at(r, c);
        ++i;
      }
      g = boost::integer::gcd(g, abs(sub.determinant()));
    }
  }
  return g;
}

}  // namespace

TEST_CASE("Smith normal form of [[2,4],[6,8]]") {
  const auto snf = smith_normal_form(IntegerMatrix::from_rows({{2, 4}, {6, 8}}));
  CHECK(snf.diagonal == std::vector<BigInt>{2, 4});
  CHECK(snf.u * IntegerMatrix::from_rows({{2, 4}, {6, 8}}) * snf.v == snf.d);
}

TEST_CASE("Smith transforms are unimodular and the invariants match minor gcds") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    const auto m = random_matrix(rng, rows, cols, trial % 2 ? 3 : 20);
    const auto snf = smith_normal_form(m);
    CHECK(snf.u * m * snf.v == snf.d);
    CHECK(snf.u * snf.u_inv == IntegerMatrix::identity(rows));
    CHECK(abs(snf.u.determinant()) == 1);
    CHECK(abs(snf.v.determinant()) == 1);
    BigInt running = 1;
    for (std::size_t k = 0; k < snf.diagonal.size(); ++k) {
      CHECK(snf.diagonal[k] > 0);
      if (k > 0) CHECK(snf.diagonal[k] % snf.diagonal[k - 1] == 0);
      running *= snf.diagonal[k];
      CHECK(minor_gcd(m, k + 1) == running);
    }
    if (snf.diagonal.size() < std::min(rows, cols)) CHECK(minor_gcd(m, snf.diagonal.size() + 1) == 0);
  }
}

TEST_CASE("integral homology of a small complex") {
  // RP^2 with one cell per degree: d1 = 0, d2 = 2
  IntegerChainComplex c{{1, 1, 1}, {IntegerMatrix(), IntegerMatrix::from_rows({{0}}), IntegerMatrix::from_rows({{2}})}};
  const auto p = integral_homology(c);
  CHECK(p.to_string() == "(Z, Z/2, 0)");
  CHECK(p.ranks == std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("field homology, d^2 check and Kunneth") {
  const auto k = Field::parse("gf(3)");
  FieldChainComplex c{k, {1, 1, 1}, {FieldMatrix(k, 0, 0), FieldMatrix(k, 1, 1), FieldMatrix(k, 1, 1)}};
  c.boundary[2].set(0, 0, k.from_int(2));
  CHECK(homology_dims(c).ranks == std::vector<std::size_t>{1, 0, 0});
  c.boundary[1].set(0, 0, k.one());
  CHECK_THROWS(check_d_squared(c));

  const auto a = field_profile({1, 1, 1}), b = field_profile({1, 0, 2});
  CHECK(kunneth(a, b).ranks == std::vector<std::size_t>{1, 1, 3, 2, 2});
  CHECK(kunneth(a, b).total() == a.total() * b.total());
  CHECK(euler_characteristic(kunneth(a, b)) == euler_characteristic(a) * euler_characteristic(b));
}
