#pragma once

// The H_0 twisted path category of a pair (L0, L1): objects form a finite
// set, every hom-set is free on G0 x G1, and composition is mu-signed with
// the first factor contravariant and the second covariant.

#include <cstdint>
#include <string>
#include <vector>

#include "pinless/groups.hpp"
#include "pinless/twisted.hpp"

namespace pinless {

/// An integer combination of basis morphisms target <- source; coefficient
/// of (g0, g1) sits at g0 * |G1| + g1.
struct Morphism {
  std::size_t target = 0;
  std::size_t source = 0;
  std::vector<std::int64_t> coeffs;

  bool is_zero() const;
  friend bool operator==(const Morphism&, const Morphism&) = default;
};

class TwistedGroupoid {
 public:
  /// Object 0 is the basepoint pair y_b.
  TwistedGroupoid(TwoCocycle mu0, TwoCocycle mu1, std::size_t objects = 1);

  const FiniteGroup& group0() const { return mu0_.group(); }
  const FiniteGroup& group1() const { return mu1_.group(); }
  const TwoCocycle& mu0() const { return mu0_; }
  const TwoCocycle& mu1() const { return mu1_; }
  std::size_t objects() const { return objects_; }
  std::size_t basis_size() const { return group0().size() * group1().size(); }
  std::size_t index(GroupIndex g0, GroupIndex g1) const { return g0 * group1().size() + g1; }
  GroupIndex part0(std::size_t i) const { return i / group1().size(); }
  GroupIndex part1(std::size_t i) const { return i % group1().size(); }

  Morphism zero(std::size_t target, std::size_t source) const;
  Morphism basis(std::size_t target, std::size_t source, GroupIndex g0, GroupIndex g1,
                 std::int64_t sign = 1) const;
  Morphism identity(std::size_t y) const;

  Morphism add(const Morphism& a, const Morphism& b) const;
  Morphism scale(const Morphism& a, std::int64_t c) const;
  /// f: y'' <- y', g: y' <- y. On basis elements
  /// (a0,a1) o (b0,b1) = (-1)^{mu0(b0,a0) + mu1(a1,b1)} (b0 a0, a1 b1).
  Morphism compose(const Morphism& f, const Morphism& g) const;
  /// Two-sided inverse of a signed basis morphism; StructuralError otherwise.
  Morphism invert(const Morphism& f) const;

  std::string to_string(const Morphism& m) const;

 private:
  void check_object(std::size_t y) const;

  TwoCocycle mu0_;
  TwoCocycle mu1_;
  std::size_t objects_;
};

/// Hom(y_b, y_b) against (Z[G0]^tw)^op (x) Z[G1]^tw via (g0,g1) -> [g0] (x) [g1].
struct EndomorphismRingWitness {
  bool valid = false;
  std::size_t products_checked = 0;
  std::string reason;
};

EndomorphismRingWitness endomorphism_ring(const TwistedGroupoid& g);

}  // namespace pinless
