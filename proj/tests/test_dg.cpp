#include <doctest.h>

#include <algorithm>
#include <random>

#include "pinless/dg.hpp"
#include "pinless/error.hpp"
#include "pinless/io.hpp"

using namespace pinless;

namespace {

GradedLineWord random_word(std::mt19937_64& rng) {
  std::vector<LineLetter> letters;
  const int lines = 1 + static_cast<int>(rng() % 6);
  for (int l = 0; l < lines; ++l) {
    const bool odd = rng() % 2;
    const auto pick = rng() % 3;
    if (pick != 1) letters.push_back({l, "", odd, false});
    if (pick != 0) letters.push_back({l, "", odd, true});
  }
  std::shuffle(letters.begin(), letters.end(), rng);
  return GradedLineWord(letters, rng() % 2 ? 1 : -1);
}

// A few small valid dg-algebras, including tensor products.
std::vector<DgAlgebra> sample_algebras(std::mt19937_64& rng) {
  std::vector<DgAlgebra> out;
  for (int i = 0; i < 4; ++i) {
    out.push_back(small_odd_algebra(static_cast<std::int64_t>(rng() % 5) - 2, static_cast<std::int64_t>(rng() % 5) - 2));
  }
  out.push_back(algebra_from_clifford(2, CliffordSign::Minus));
  out.push_back(algebra_from_clifford(1, CliffordSign::Plus));
  out.push_back(algebra_from_ring(TwistedRing(TwoCocycle::parse(FiniteGroup::cyclic(2), "[(1,1)]"))));
  out.push_back(tensor_algebra(out[0], out[1]));
  out.push_back(tensor_algebra(out[4], out[2]));
  return out;
}

int parity(const DgAlgebra& a, std::size_t i) { return a.grading.parity(a.degrees[i]); }

}  // namespace

TEST_CASE("graded-line rewriting is confluent") {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 1000; ++i) {
    const auto w = random_word(rng);
    const auto ref = w.canonical();
    CHECK(ref.is_canonical());
    for (int j = 0; j < 3; ++j) {
      const auto other = w.canonical_random(rng);
      CHECK(other.letters() == ref.letters());
      CHECK(other.sign() == ref.sign());
    }
  }
}

TEST_CASE("graded-line moves") {
  GradedLineWord w({{0, "a", true, false}, {1, "b", true, false}}, 1);
  w.braid(0);
  CHECK(w.sign() == -1);
  GradedLineWord v({{0, "a", false, false}, {1, "b", true, false}}, 1);
  v.braid(0);
  CHECK(v.sign() == 1);
  GradedLineWord c({{0, "a", true, true}, {0, "a", true, false}}, 1);
  CHECK(c.can_contract(0));
  c.contract(0);
  CHECK(c.letters().empty());
  GradedLineWord s({{2, "l", false, false}}, 1);
  s.shift(2);
  CHECK(s.letters()[0].odd);
  CHECK(s.shifts() == 1);
  CHECK_THROWS_AS(GradedLineWord({{0, "a", true, false}, {0, "a", false, true}}), StructuralError);
  CHECK_THROWS_AS(GradedLineWord({{0, "a", true, false}, {0, "a", true, false}}), StructuralError);
}

TEST_CASE("constructions preserve the dg laws") {
  std::mt19937_64 rng(77);
  for (const auto& a : sample_algebras(rng)) {
    CHECK_FALSE(describe_algebra_failure(a).has_value());
    CHECK(opposite_algebra(opposite_algebra(a)) == a);
    CHECK_FALSE(describe_algebra_failure(opposite_algebra(a)).has_value());
    const auto free = free_module(a);
    CHECK_FALSE(describe_module_failure(a, free).has_value());
    for (int k : {1, 2, 3}) {
      const auto shifted = shift_module(free, k);
      CHECK_FALSE(describe_module_failure(a, shifted).has_value());
      for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) CHECK(shifted.d[r][c] == (k % 2 ? -1 : 1) * free.d[r][c]);
    }
  }
}

TEST_CASE("tensor product sign on all basis pairs") {
  std::mt19937_64 rng(5);
  const auto algs = sample_algebras(rng);
  for (std::size_t x = 0; x + 1 < algs.size(); x += 2) {
    const auto& A = algs[x];
    const auto& B = algs[x + 1];
    const auto T = tensor_algebra(A, B);
    CHECK_FALSE(describe_algebra_failure(T).has_value());
    const std::size_t nb = B.dim();
    for (std::size_t i1 = 0; i1 < A.dim(); ++i1)
      for (std::size_t j1 = 0; j1 < nb; ++j1)
        for (std::size_t i2 = 0; i2 < A.dim(); ++i2)
          for (std::size_t j2 = 0; j2 < nb; ++j2) {
            const int sign = parity(B, j1) && parity(A, i2) ? -1 : 1;
            const auto& got = T.mult[i1 * nb + j1][i2 * nb + j2];
            for (std::size_t p = 0; p < A.dim(); ++p)
              for (std::size_t q = 0; q < nb; ++q)
                CHECK(got[p * nb + q] == sign * A.mult[i1][i2][p] * B.mult[j1][j2][q]);
          }
  }
}

TEST_CASE("broken algebras are reported") {
  auto a = small_odd_algebra(1, 0);
  a.mult[1][1] = {0, 1};  // x^2 = x breaks the grading
  CHECK(describe_algebra_failure(a).has_value());
  CHECK_THROWS_AS(validate_algebra(a), ValidationError);
  auto b = small_odd_algebra(0, 0);
  b.d = {{0, 0}, {1, 0}};  // d(1) = x is of the wrong degree for the unit
  CHECK(describe_algebra_failure(b).has_value());
}

TEST_CASE("homotopies use d f + f d") {
  const auto a = small_odd_algebra(0, 1);
  const auto m = free_module(a);
  const IntMatrix f{{0, 0}, {1, 0}};  // 1 -> x
  const IntMatrix id{{1, 0}, {0, 1}}, zero{{0, 0}, {0, 0}};
  CHECK(is_homotopy(m, m, f, id, zero));
  CHECK_FALSE(is_homotopy(m, m, f, zero, id));
  CHECK_THROWS_AS(is_homotopy(m, m, id, id, zero), StructuralError);
}

TEST_CASE("extension size of a two-step extension") {
  const auto file = filtered_module_from_json(read_json_file(PINLESS_DATA_DIR "/odd_extension.json"));
  const auto ext = extension_size(file.data);
  REQUIRE(ext.ok);
  CHECK(ext.size == 2);
  CHECK(ext.per_level == std::vector<std::size_t>{1, 1});
  REQUIRE(file.chi.has_value());
  const auto lb = size_lower_bound(file.data, *file.chi);
  CHECK(lb.bound == 2);
  CHECK(lb.bound <= lb.size);

  const auto k = file.data.field;
  CHECK_THROWS_AS(size_lower_bound(file.data, {k.one(), k.one()}), ValidationError);

  auto bad = file.data;
  bad.levels[0].certificates[0].generator = {0, 1, 0, 0};  // wrong degree
  CHECK_FALSE(extension_size(bad).ok);
  bad = file.data;
  std::swap(bad.levels[0], bad.levels[1]);
  CHECK_THROWS_AS(extension_size(bad), StructuralError);
  bad = file.data;
  std::swap(bad.levels[0].basis, bad.levels[1].basis);
  bad.levels[0].value = 0;
  CHECK_FALSE(extension_size(bad).ok);
}

TEST_CASE("filtered module JSON round trip") {
  const auto file = filtered_module_from_json(read_json_file(PINLESS_DATA_DIR "/odd_extension.json"));
  Json j = to_json(file.data);
  const auto again = filtered_module_from_json(j);
  CHECK(again.data.algebra == file.data.algebra);
  CHECK(again.data.module == file.data.module);
  CHECK(extension_size(again.data).size == 2);
  CHECK_THROWS_AS(filtered_module_from_json(parse_json("{\"field\": \"gf(5)\"}")), ParseError);
}
