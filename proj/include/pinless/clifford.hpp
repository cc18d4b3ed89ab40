#pragma once

// Exact Clifford algebras over Q with the relation vw + wv = 2 sigma (v, w),
// Pin elements as products of rational unit vectors, and relative Pin torsors.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pinless {

using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<std::vector<Rational>>;

enum class CliffordSign { Plus, Minus };
std::string to_string(CliffordSign s);
CliffordSign parse_clifford_sign(std::string_view text);

/// Sign and blade of e_a * e_b for blades given as bit masks.
std::pair<int, std::uint32_t> blade_product(std::uint32_t a, std::uint32_t b, CliffordSign sigma);

class CliffordElement {
 public:
  /// The zero element; n <= 16.
  CliffordElement(unsigned n, CliffordSign sigma);

  static CliffordElement scalar(unsigned n, CliffordSign sigma, Rational c);
  static CliffordElement blade(unsigned n, CliffordSign sigma, std::uint32_t mask, Rational c = 1);
  static CliffordElement vector(CliffordSign sigma, const RationalVector& v);

  unsigned dim() const { return n_; }
  CliffordSign sign() const { return sigma_; }
  const Rational& coeff(std::uint32_t mask) const { return coeffs_[mask]; }
  void set(std::uint32_t mask, Rational c) { coeffs_[mask] = std::move(c); }

  /// Reverses the order of vectors in every blade.
  CliffordElement reverse() const;
  bool is_vector() const;
  RationalVector vector_part() const;
  std::string to_string() const;

  CliffordElement operator+(const CliffordElement& o) const;
  CliffordElement operator-() const;
  CliffordElement operator*(const CliffordElement& o) const;
  CliffordElement operator*(const Rational& c) const;

  friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
    return a.n_ == b.n_ && a.sigma_ == b.sigma_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void require_compatible(const CliffordElement& o) const;

  unsigned n_;
  CliffordSign sigma_;
  std::vector<Rational> coeffs_;
};

inline CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b) {
  return a * b;
}

Rational inner(const RationalVector& a, const RationalVector& b);

/// A product of unit vectors together with its value in the Clifford algebra.
class PinElement {
 public:
  /// StructuralError unless every factor has length n and (v, v) = 1.
  PinElement(unsigned n, CliffordSign sigma, std::vector<RationalVector> factors, int sign = 1);

  unsigned dim() const { return value_.dim(); }
  CliffordSign convention() const { return value_.sign(); }
  const std::vector<RationalVector>& factors() const { return factors_; }
  const CliffordElement& value() const { return value_; }

 private:
  std::vector<RationalVector> factors_;
  CliffordElement value_;
};

/// v -> (-1)^k x v x^{-1} for x a product of k unit vectors; each factor acts
/// as the reflection in its orthogonal hyperplane and the empty product as
/// the identity. ValidationError if the result is not a vector.
RationalVector pin_action(const PinElement& x, const RationalVector& v);

/// Column i is pin_action(x, e_i).
RationalMatrix projection_matrix(const PinElement& x);

/// Groups all signed products of at most max_factors standard basis vectors
/// by their projection and checks each fibre is exactly {x, -x}.
bool verify_two_to_one(unsigned n, CliffordSign sigma, unsigned max_factors = 4);

enum class PreimageGroup { Z4, KleinFour };
std::string to_string(PreimageGroup g);

struct ReflectionPreimage {
  PreimageGroup type;
  std::vector<CliffordElement> elements;  // 1, -1, e1, -e1
  unsigned order_of_e1;
};

/// The preimage of {1, reflection in e1^perp} under projection.
ReflectionPreimage reflection_preimage_group(unsigned n, CliffordSign sigma);

/// Unit vector from rational stereographic coordinates t in Q^{n-1}.
RationalVector stereographic_unit_vector(const RationalVector& t);

// ---------------------------------------------------------------------------
// relative Pin torsors

/// An element of the Z/2-torsor of relative Pin structures between two end
/// data; `flipped` picks one of the two elements relative to the reference.
struct TorsorElement {
  std::string left;
  std::string right;
  bool flipped = false;

  friend bool operator==(const TorsorElement&, const TorsorElement&) = default;
};

TorsorElement flip(const TorsorElement& t);
/// The unit torsor on length-0 data; its flipped element acts as the flip.
TorsorElement unit_torsor(const std::string& end, bool flipped = false);
/// StructuralError unless t1.right == t2.left.
TorsorElement glue_torsors(const TorsorElement& t1, const TorsorElement& t2);
/// Image in the rank-1 integer module |E|: the flip acts as e -> -e.
int orientation_line_sign(const TorsorElement& t);

}  // namespace pinless
