#pragma once

// Twisted group rings Z[G]^tw and k[G]^tw, their augmentations into finite
// fields, the Delta map and the rank-1 local systems it produces.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pinless/field.hpp"
#include "pinless/groups.hpp"
#include "pinless/linalg.hpp"

namespace pinless {

/// Ring tag: a group, a valid normalized cocycle, and coefficients in Z
/// (no field) or in a finite field.
class TwistedRing {
 public:
  /// StructuralError when mu is not a normalized cocycle.
  explicit TwistedRing(TwoCocycle mu, std::optional<Field> field = std::nullopt);

  const FiniteGroup& group() const { return mu_.group(); }
  const TwoCocycle& cocycle() const { return mu_; }
  const std::optional<Field>& field() const { return field_; }
  std::size_t size() const { return group().size(); }

  friend bool operator==(const TwistedRing& a, const TwistedRing& b) {
    return a.mu_ == b.mu_ && a.field_ == b.field_;
  }

 private:
  TwoCocycle mu_;
  std::optional<Field> field_;
};

/// Coefficients indexed by group element. Over Z they are integers, over a
/// field they are element codes.
struct TwistedRingElement {
  TwistedRing ring;
  std::vector<std::int64_t> coeffs;

  static TwistedRingElement zero(const TwistedRing& ring);
  static TwistedRingElement basis(const TwistedRing& ring, GroupIndex g, std::int64_t c = 1);
  static TwistedRingElement one(const TwistedRing& ring) {
    return basis(ring, ring.group().identity());
  }

  bool is_zero() const;
  std::string to_string() const;

  friend bool operator==(const TwistedRingElement& a, const TwistedRingElement& b) {
    return a.ring == b.ring && a.coeffs == b.coeffs;
  }
};

TwistedRingElement twisted_add(const TwistedRingElement& a, const TwistedRingElement& b);
TwistedRingElement twisted_neg(const TwistedRingElement& a);
/// [g][h] = (-1)^{mu(g,h)} [gh], extended bilinearly. StructuralError on
/// mismatched ring tags.
TwistedRingElement twisted_mul(const TwistedRingElement& a, const TwistedRingElement& b);

/// Checks, without requiring mu to be a cocycle, whether the sign-twisted
/// basis product is associative with [e] as two-sided unit.
bool twisted_product_is_unital_associative(const TwoCocycle& mu);

struct GaussianIsomorphism {
  bool isomorphic = false;
  /// Image of each basis element in Z[i] as (real, imaginary); filled when
  /// isomorphic.
  std::vector<std::pair<std::int64_t, std::int64_t>> witness;
  std::string reason;
};

/// For Z/2 with its cocycle: verifies e -> 1, x -> i is a unital ring
/// isomorphism Z[Z/2]^tw -> Z[i]. UnsupportedError for any other group.
GaussianIsomorphism check_gaussian_isomorphism(const TwistedRing& ring);

struct Augmentation {
  TwistedRing ring;  // the integral ring tag
  Field field;
  std::vector<FieldElement> images;  // indexed by group element

  /// eps(e) = 1 and eps(g) eps(h) = (-1)^{mu(g,h)} eps(gh) for all pairs.
  bool satisfies_invariant() const;
  std::string to_string() const;
};

/// Every augmentation of Z[G]^tw into the field, in ascending lexicographic
/// order of image codes. Generator images are searched and the rest
/// propagated through the Augmentation relation.
std::vector<Augmentation> enumerate_augmentations(const TwistedRing& ring, const Field& field);

/// In characteristic 2 the sign -1 equals 1, so the twist is invisible.
inline bool twist_trivializes(const Field& field) { return field.characteristic() == 2; }

enum class DeltaConvention { Double, Inverse };
std::string to_string(DeltaConvention c);
/// Accepts "double" or "inverse" (any case).
DeltaConvention parse_delta(std::string_view text);

/// A representation rho: G -> GL_m(k). rank 1 in every built-in flow.
class LocalSystem {
 public:
  /// Validates rho(e) = 1 and rho(g) rho(h) = rho(gh); ValidationError names
  /// the first violating pair.
  LocalSystem(FiniteGroup group, Field field, std::vector<FieldMatrix> monodromy);

  static LocalSystem character(FiniteGroup group, Field field, std::vector<FieldElement> values);
  static LocalSystem trivial(FiniteGroup group, Field field);
  /// Rank-1 system from values on a generating subset, extended
  /// multiplicatively. ValidationError when inconsistent or not generating.
  static LocalSystem from_values(FiniteGroup group, Field field,
                                 const std::map<GroupIndex, FieldElement>& values);

  const FiniteGroup& group() const { return group_; }
  const Field& field() const { return field_; }
  std::size_t rank() const { return monodromy_.front().rows(); }
  const FieldMatrix& matrix(GroupIndex g) const { return monodromy_[g]; }
  /// The scalar rho(g); StructuralError unless rank 1.
  FieldElement value(GroupIndex g) const;
  std::vector<FieldElement> values() const;

  friend bool operator==(const LocalSystem& a, const LocalSystem& b) {
    return a.group_ == b.group_ && a.field_ == b.field_ && a.monodromy_ == b.monodromy_;
  }

 private:
  FiniteGroup group_;
  Field field_;
  std::vector<FieldMatrix> monodromy_;
};

/// rho = eps o Delta. DOUBLE: rho(g) = eps(g)^2. INVERSE:
/// rho(g) = eps(g) eps(g~^{-1}) with g~^{-1} = (-1)^{mu(g,g^{-1})} [g^{-1}].
LocalSystem delta_monodromy(const Augmentation& eps, DeltaConvention convention);

/// Re-identifies the basis by [g] -> -[g] at one element g != e. The cocycle
/// changes by the coboundary of the indicator of g and eps(g) changes sign.
Augmentation flip_basis_sign(const Augmentation& eps, GroupIndex g);

/// mu((g1,g2),(h1,h2)) = mu1(g1,h1) + mu2(g2,h2) on G1 x G2.
TwoCocycle product_cocycle(const TwoCocycle& mu1, const TwoCocycle& mu2);

}  // namespace pinless
