// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "pinless/assemble.hpp"
#include "pinless/clifford.hpp"
#include "pinless/dg.hpp"
#include "pinless/groups.hpp"
#include "pinless/report.hpp"
#include "pinless/spaces.hpp"
#include "pinless/twisted.hpp"

using namespace pinless;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int n, const char* title, double limit_ms, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (out.ok && ms >= limit_ms) {
    out.ok = false;
    out.detail = "over time limit";
  }
  if (!out.ok) ++failures;
  std::printf("%s %2d %-28s %10.3f ms (limit %g ms)%s%s\n", out.ok ? "PASS" : "FAIL", n, title, ms, limit_ms,
              out.detail.empty() ? "" : ": ", out.detail.c_str());
}

// Exhaustive: every map G -> k checked against the augmentation relation.
std::size_t brute_augmentations(const TwoCocycle& mu, const Field& k) {
  const auto& g = mu.group();
  const auto elems = k.elements();
  const std::size_t n = g.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= elems.size();
  std::size_t count = 0;
  std::vector<FieldElement> img(n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= elems.size()) img[i] = elems[c % elems.size()];
    bool ok = img[g.identity()] == k.one();
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) {
        auto rhs = img[g.mul(a, b)];
        if (mu(a, b)) rhs = k.neg(rhs);
        ok = k.mul(img[a], img[b]) == rhs;
      }
    count += ok;
  }
  return count;
}

// Exhaustive: dim H^2 = log2 |Z^2| / |B^2| over all 2^{n^2} functions.
std::size_t brute_h2(const FiniteGroup& g) {
  const std::size_t n = g.size(), cells = n * n;
  std::size_t cocycles = 0;
  for (std::uint64_t f = 0; f < (std::uint64_t{1} << cells); ++f) {
    const auto at = [&](std::size_t a, std::size_t b) { return static_cast<int>(f >> (a * n + b) & 1); };
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        for (std::size_t c = 0; c < n && ok; ++c)
          ok = ((at(a, b) + at(g.mul(a, b), c)) & 1) == ((at(b, c) + at(a, g.mul(b, c))) & 1);
    cocycles += ok;
  }
  std::set<std::uint64_t> boundaries;
  for (std::uint64_t nu = 0; nu < (std::uint64_t{1} << n); ++nu) {
    std::uint64_t f = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (((nu >> a) ^ (nu >> b) ^ (nu >> g.mul(a, b))) & 1) f |= std::uint64_t{1} << (a * n + b);
    boundaries.insert(f);
  }
  std::size_t ratio = cocycles / boundaries.size(), dim = 0;
  while (ratio > 1) ratio >>= 1, ++dim;
  return dim;
}

std::size_t total_dims(std::string_view space, const Field& k) {
  return homology_dims(specialize_trivial(build(space), k)).total();
}

bool palindrome(const std::vector<std::size_t>& v) { return std::equal(v.begin(), v.end(), v.rbegin()); }

const char* kBuiltins[] = {"rp(2)",
                           "rp(3)",
                           "rp(4)",
                           "sphere(1)",
                           "sphere(2)",
                           "sphere(3)",
                           "cp2",
                           "lens(3,3)",
                           "lens(5,3)",
                           "lens(7,5)",
                           "torus(2)",
                           "torus(3)",
                           "connsum(lens(5,3),lens(5,3))",
                           "connsum_power(lens(5,3),3)",
                           "product(rp(2),lens(5,3))",
                           "product(rp(2),connsum(lens(5,3),connsum(lens(5,3),lens(5,3))))",
                           "product(sphere(2),torus(2))"};

}  // namespace

int main() {
  criterion(1, "twisted ring is Z[i]", 1, [](Outcome& o) {
    const TwistedRing ring(TwoCocycle::parse(FiniteGroup::cyclic(2), "[(1,1)]"));
    const auto iso = check_gaussian_isomorphism(ring);
    o.require(iso.isomorphic, "not isomorphic: " + iso.reason);
    o.require(iso.witness.size() == 2 && iso.witness[1] == std::pair<std::int64_t, std::int64_t>{0, 1},
              "witness is not x -> i");
    const auto x = TwistedRingElement::basis(ring, 1);
    o.require(twisted_mul(x, x) == twisted_neg(TwistedRingElement::one(ring)), "x*x != -e");
  });

  criterion(2, "augmentation census", 10, [](Outcome& o) {
    const auto mu = TwoCocycle::parse(FiniteGroup::cyclic(2), "[(1,1)]");
    for (auto [field, expect] : {std::pair{"gf(5)", 2}, {"gf(13)", 2}, {"gf(3)", 0}, {"gf(9)", 2}}) {
      const auto k = Field::parse(field);
      const auto augs = enumerate_augmentations(TwistedRing(mu), k);
      o.require(augs.size() == static_cast<std::size_t>(expect), std::string("wrong count over ") + field);
      o.require(brute_augmentations(mu, k) == augs.size(), std::string("oracle disagrees over ") + field);
    }
  });

  criterion(3, "H^2 classification", 5000, [](Outcome& o) {
    o.require(classify_h2(FiniteGroup::cyclic(2)).dimension == 1, "Z/2");
    for (std::size_t p : {3, 5, 7, 11, 13})
      o.require(classify_h2(FiniteGroup::cyclic(p)).dimension == 0, "Z/" + std::to_string(p));
    const auto klein = FiniteGroup::parse("prod(z(2),z(2))");
    o.require(classify_h2(klein).dimension == 3, "Z/2 x Z/2");
    for (const auto& g : {FiniteGroup::trivial(), FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),
                          FiniteGroup::cyclic(4), klein})
      o.require(brute_h2(g) == classify_h2(g).dimension, "oracle disagrees on " + g.spec());
  });

  criterion(4, "classical bound is 6", 1000, [](Outcome& o) {
    const auto f2 = Field::parse("gf(2)");
    o.require(total_dims("rp(2)", f2) == 3, "RP^2");
    for (std::size_t p : {3, 5, 7})
      for (std::size_t r = 1; r <= 4; ++r)
        o.require(total_dims("connsum_power(lens(" + std::to_string(p) + ",3)," + std::to_string(r) + ")", f2) == 2,
                  "lens connected sum");
    const auto r = compute_bound("product(rp(2),connsum(lens(5,3),connsum(lens(5,3),lens(5,3))))",
                                 Field::parse("gf(5)"), DeltaConvention::Double);
    o.require(r.classical_bound == 6, "product classical bound");
  });

  criterion(5, "growth of the new bound", 5000, [](Outcome& o) {
    const auto k = Field::parse("gf(5)");
    const auto rp2 = compute_bound("rp(2)", k, DeltaConvention::Double);
    std::size_t factor = 0;
    for (const auto& s : rp2.systems) factor = std::max(factor, s.total);
    o.require(factor > 0, "no twisted system on RP^2");
    const auto t = report_growth(5, 1, 10, k, DeltaConvention::Double);
    for (const auto& row : t.rows)
      o.require(row.new_bound == factor * (2 * row.r + 2), "r = " + std::to_string(row.r));
    o.require(t.strictly_increasing, "not strictly increasing");
    o.require(t.first_exceeding.has_value() && t.rows.back().new_bound > 6, "never exceeds 6");
    for (const auto& row : t.rows)
      if (t.first_exceeding && row.r >= *t.first_exceeding) o.require(row.new_bound > 6, "dips back to 6");
  });

  criterion(6, "torsion-lift test", 1000, [](Outcome& o) {
    o.require(torsion_lift_test(build("rp(2)")), "rp(2)");
    for (auto space : kBuiltins) {
      const auto c = build(space);
      if (c.w2.known && c.w2.is_zero()) o.require(torsion_lift_test(c), space);
    }
    o.require(!torsion_lift_test(build("cp2")), "cp2");
  });

  criterion(7, "Clifford and Pin", 1000, [](Outcome& o) {
    const auto minus = reflection_preimage_group(3, CliffordSign::Minus);
    const auto plus = reflection_preimage_group(3, CliffordSign::Plus);
    o.require((minus.type == PreimageGroup::Z4) != (plus.type == PreimageGroup::Z4), "Z/4 for both or neither");
    o.require(minus.type == PreimageGroup::KleinFour || plus.type == PreimageGroup::KleinFour, "no Klein four");
    std::mt19937_64 rng(2024);
    const auto unit = [&](unsigned n) {
      RationalVector t(n - 1);
      for (auto& x : t) x = Rational(static_cast<long long>(rng() % 13) - 6, 1 + static_cast<long long>(rng() % 5));
      return stereographic_unit_vector(t);
    };
    for (int i = 0; i < 100; ++i) {
      const unsigned n = 1 + i % 4;
      std::vector<RationalVector> factors;
      for (unsigned f = 0; f < 1 + rng() % 4; ++f) factors.push_back(unit(n));
      const PinElement x(n, i % 2 ? CliffordSign::Plus : CliffordSign::Minus, factors);
      const auto a = unit(n), b = unit(n);
      o.require(inner(pin_action(x, a), pin_action(x, b)) == inner(a, b), "inner product changed");
    }
  });

  criterion(8, "dg laws", 5000, [](Outcome& o) {
    std::mt19937_64 rng(8);
    std::vector<DgAlgebra> algs;
    for (int i = 0; i < 4; ++i)
      algs.push_back(small_odd_algebra(static_cast<std::int64_t>(rng() % 7) - 3, static_cast<std::int64_t>(rng() % 7) - 3));
    algs.push_back(algebra_from_clifford(2, CliffordSign::Minus));
    algs.push_back(algebra_from_ring(TwistedRing(TwoCocycle::parse(FiniteGroup::cyclic(2), "[(1,1)]"))));
    const auto mu = TwoCocycle::parse(FiniteGroup::cyclic(2), "[(1,1)]");
    algs.push_back(algebra_from_groupoid(TwistedGroupoid(mu, mu)));
    for (std::size_t i = 0; i < algs.size(); ++i) {
      const auto& A = algs[i];
      const auto& B = algs[(i + 1) % algs.size()];
      o.require(opposite_algebra(opposite_algebra(A)) == A, "(A^op)^op != A");
      o.require(!describe_algebra_failure(opposite_algebra(A)), "A^op invalid");
      const auto T = tensor_algebra(A, B);
      o.require(!describe_algebra_failure(T), "A (x) B invalid");
      const std::size_t nb = B.dim();
      const auto par = [](const DgAlgebra& x, std::size_t j) { return x.grading.parity(x.degrees[j]); };
      for (std::size_t a1 = 0; a1 < A.dim(); ++a1)
        for (std::size_t b1 = 0; b1 < nb; ++b1)
          for (std::size_t a2 = 0; a2 < A.dim(); ++a2)
            for (std::size_t b2 = 0; b2 < nb; ++b2) {
              // (a (x) b)(a' (x) b') = (-1)^{|b||a'|} (a a') (x) (b b')
              const int sign = par(B, b1) && par(A, a2) ? -1 : 1;
              for (std::size_t p = 0; p < A.dim(); ++p)
                for (std::size_t q = 0; q < nb; ++q)
                  o.require(T.mult[a1 * nb + b1][a2 * nb + b2][p * nb + q] ==
                                sign * A.mult[a1][a2][p] * B.mult[b1][b2][q],
                            "tensor sign");
            }
      const auto m = free_module(A);
      const auto s = shift_module(m, 1);
      for (std::size_t r = 0; r < A.dim(); ++r)
        for (std::size_t c = 0; c < A.dim(); ++c) o.require(s.d[r][c] == -m.d[r][c], "shift does not negate d");
      o.require(!describe_module_failure(A, s), "shifted module invalid");
    }
    for (int i = 0; i < 1000; ++i) {
      std::vector<LineLetter> letters;
      const int lines = 1 + static_cast<int>(rng() % 6);
      for (int l = 0; l < lines; ++l) {
        const bool odd = rng() % 2;
        const auto pick = rng() % 3;
        if (pick != 1) letters.push_back({l, "", odd, false});
        if (pick != 0) letters.push_back({l, "", odd, true});
      }
      std::shuffle(letters.begin(), letters.end(), rng);
      const GradedLineWord w(letters, 1);
      const auto a = w.canonical(), b = w.canonical_random(rng);
      o.require(a.letters() == b.letters() && a.sign() == b.sign(), "rewriting not confluent");
    }
  });

  criterion(9, "extension sizes", 1000, [](Outcome& o) {
    for (auto [space, expect] : {std::pair{"rp(2)", 3}, {"lens(5,3)", 4}, {"torus(2)", 4}}) {
      const auto cells = build(space);
      for (auto field : {"gf(5)", "gf(9)", "gf(13)"}) {
        const auto k = Field::parse(field);
        const auto c = assemble(complex_spec_from_cells(cells, DeltaConvention::Double));
        const auto view = filtered_view(c, k);
        const auto ext = extension_size(view);
        o.require(ext.ok && ext.size == static_cast<std::size_t>(expect), std::string(space) + " size");
        for (const auto& eps : enumerate_augmentations(TwistedRing(cells.mu), k)) {
          const auto lb = size_lower_bound(view, augmentation_character(c.groupoid, eps, eps));
          o.require(lb.bound <= ext.size, std::string(space) + " lower bound exceeds size");
        }
      }
    }
  });

  criterion(10, "pipeline agreement", 10000, [](Outcome& o) {
    for (auto space : kBuiltins) {
      const auto cells = build(space);
      const auto chi = euler_characteristic(cells.cells);
      for (auto conv : {DeltaConvention::Double, DeltaConvention::Inverse}) {
        const auto c = assemble(complex_spec_from_cells(cells, conv));
        for (auto field : {"gf(5)", "gf(9)", "gf(13)"}) {
          const auto k = Field::parse(field);
          for (const auto& eps : enumerate_augmentations(TwistedRing(cells.mu), k)) {
            const auto direct = homology_dims(specialize(cells, delta_monodromy(eps, conv)));
            const auto via = specialized_homology(specialize_augmented(c, eps, conv));
            o.require(direct == via, std::string(space) + " routes disagree over " + field);
            o.require(euler_characteristic(direct) == chi, std::string(space) + " Euler characteristic");
          }
          if (cells.orientable)
            o.require(palindrome(homology_dims(specialize_trivial(cells, k)).ranks),
                      std::string(space) + " not palindromic");
        }
      }
    }
  });

  return failures == 0 ? 0 : 1;
}
