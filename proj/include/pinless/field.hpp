#pragma once

// Finite fields F_p and F_{p^2}.
//
// Elements are stored as a single canonical code: c0 + c1*p for c0 + c1*t,
// where t is a root of the fixed irreducible t^2 + a*t + b. For prime fields
// the code is the residue itself, which lets the elimination kernels work on
// raw uint32 rows.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pinless {

struct FieldElement {
  std::uint32_t code = 0;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

class Field {
 public:
  /// F_p; throws StructuralError unless p is a prime below 2^16.
  static Field prime(std::uint32_t p);
  /// F_{p^2} built from the first irreducible t^2 + a t + b in (a, b)
  /// lexicographic order; for odd p this is t^2 = -b with -b a non-square.
  static Field quadratic(std::uint32_t p);
  /// F_{p^2} with an explicit modulus t^2 + a t + b, checked irreducible.
  static Field quadratic(std::uint32_t p, std::uint32_t a, std::uint32_t b);
  /// Accepts `gf(p)`, `gf(p^2)` and `gf(q)` with q = p or p^2.
  static Field parse(std::string_view text);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return degree_; }
  std::uint32_t order() const { return degree_ == 1 ? p_ : p_ * p_; }
  /// The modulus coefficients (a, b) of t^2 + a t + b; zero for prime fields.
  std::uint32_t modulus_a() const { return a_; }
  std::uint32_t modulus_b() const { return b_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement from_int(std::int64_t v) const;
  /// t, the adjoined root; StructuralError on prime fields.
  FieldElement generator_t() const;
  FieldElement make(std::uint32_t c0, std::uint32_t c1) const;
  std::uint32_t c0(FieldElement x) const { return x.code % p_; }
  std::uint32_t c1(FieldElement x) const { return x.code / p_; }

  FieldElement add(FieldElement x, FieldElement y) const;
  FieldElement sub(FieldElement x, FieldElement y) const;
  FieldElement neg(FieldElement x) const;
  FieldElement mul(FieldElement x, FieldElement y) const;
  /// Multiplicative inverse; StructuralError on zero.
  FieldElement inv(FieldElement x) const;
  FieldElement pow(FieldElement x, std::uint64_t e) const;
  bool is_zero(FieldElement x) const { return x.code == 0; }
  bool is_square(FieldElement x) const;

  /// Every element in ascending code order.
  std::vector<FieldElement> elements() const;
  /// Nonzero elements in ascending code order.
  std::vector<FieldElement> units() const;

  /// True iff the unit group contains an element of order n.
  bool has_root_of_unity(std::uint64_t n) const { return (order() - 1) % n == 0; }

  std::string to_string(FieldElement x) const;
  /// Parses an element literal: an integer, `t`, or `c0+c1t` forms.
  FieldElement parse_element(std::string_view text) const;
  /// Canonical spec string: gf(p) or gf(p^2).
  std::string spec() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.degree_ == b.degree_ && a.a_ == b.a_ && a.b_ == b.b_;
  }

 private:
  Field(std::uint32_t p, unsigned degree, std::uint32_t a, std::uint32_t b)
      : p_(p), degree_(degree), a_(a), b_(b) {}

  std::uint32_t p_;
  unsigned degree_;
  std::uint32_t a_;
  std::uint32_t b_;
};

bool is_prime(std::uint64_t n);

}  // namespace pinless
