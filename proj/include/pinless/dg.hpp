#pragma once

// dg conventions: graded lines with Koszul signs, dg-algebras and right
// dg-modules given by integer structure constants, opposite / tensor / shift,
// homotopies, and iterated extensions of free modules.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pinless/clifford.hpp"
#include "pinless/field.hpp"
#include "pinless/groupoid.hpp"
#include "pinless/linalg.hpp"
#include "pinless/twisted.hpp"

namespace pinless {

// ---------------------------------------------------------------------------
// graded lines

/// One rank-1 generator. A letter and its dual share `line`.
struct LineLetter {
  int line = 0;
  std::string label;
  bool odd = false;
  bool dual = false;
  friend bool operator==(const LineLetter&, const LineLetter&) = default;
};

/// A tensor word of graded lines with an orientation sign. Braiding adjacent
/// letters costs (-1)^{p p'}; an adjacent pair (l^v, l) contracts to 1.
class GradedLineWord {
 public:
  GradedLineWord() = default;
  /// StructuralError if a line appears twice with the same variance or its
  /// letters disagree on parity.
  explicit GradedLineWord(std::vector<LineLetter> letters, int sign = 1);

  const std::vector<LineLetter>& letters() const { return letters_; }
  int sign() const { return sign_; }
  std::size_t shifts() const { return shifts_; }

  void braid(std::size_t i);
  bool can_contract(std::size_t i) const;
  void contract(std::size_t i);
  /// Grading-shifting isomorphism on a line: toggles the parity of the line
  /// and of its dual, and is counted.
  void shift(int line);

  /// Contracts every dual pair, then sorts by (line, dual). Deterministic.
  GradedLineWord canonical() const;
  /// The same normal form reached through a random sequence of moves.
  GradedLineWord canonical_random(std::mt19937_64& rng) const;
  bool is_canonical() const;

  std::string to_string() const;

 private:
  std::vector<LineLetter> letters_;
  int sign_ = 1;
  std::size_t shifts_ = 0;
};

// ---------------------------------------------------------------------------
// gradings, algebras, modules

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// modulus 0 is Z; 1 means ungraded (everything in degree 0); otherwise an
/// even modulus 2k.
struct Grading {
  int modulus = 2;
  int normalize(std::int64_t d) const;
  int parity(std::int64_t d) const { return modulus == 1 ? 0 : static_cast<int>(((d % 2) + 2) % 2); }
  bool operator==(const Grading&) const = default;
};

struct DgAlgebra {
  Grading grading;
  std::vector<std::string> labels;
  std::vector<int> degrees;
  /// mult[i][j] holds the coefficients of e_i e_j.
  std::vector<std::vector<std::vector<std::int64_t>>> mult;
  /// d[r][c] is the coefficient of e_r in d(e_c).
  IntMatrix d;
  std::size_t unit = 0;

  std::size_t dim() const { return degrees.size(); }
  bool operator==(const DgAlgebra&) const = default;
};

/// First violated law (unit, grading, associativity, Leibniz, d^2 = 0), or nullopt.
std::optional<std::string> describe_algebra_failure(const DgAlgebra& a);
/// ValidationError with the description.
void validate_algebra(const DgAlgebra& a);

/// a *op b = (-1)^{|a||b|} b a
DgAlgebra opposite_algebra(const DgAlgebra& a);
/// (a' (x) b')(a (x) b) = (-1)^{|b'||a|} (a'a) (x) (b'b); basis (i, j) at i * dim(B) + j.
DgAlgebra tensor_algebra(const DgAlgebra& a, const DgAlgebra& b);

/// Degree-0 algebra of an integral twisted group ring.
DgAlgebra algebra_from_ring(const TwistedRing& ring);
/// Hom(y_b, y_b) with the composition product, basis (g0, g1).
DgAlgebra algebra_from_groupoid(const TwistedGroupoid& g);
/// Cl(n) with orthonormal basis blades, graded by blade parity, d = 0.
DgAlgebra algebra_from_clifford(unsigned n, CliffordSign sigma);
/// Span{1, x} with x odd, x^2 = c and dx = a.
DgAlgebra small_odd_algebra(std::int64_t c, std::int64_t a);

/// A right dg-module. action[k][r][c] is the coefficient of m_r in m_c e_k.
struct DgModule {
  Grading grading;
  std::vector<int> degrees;
  IntMatrix d;
  std::vector<IntMatrix> action;

  std::size_t dim() const { return degrees.size(); }
  bool operator==(const DgModule&) const = default;
};

std::optional<std::string> describe_module_failure(const DgAlgebra& a, const DgModule& m);
DgModule free_module(const DgAlgebra& a);
/// Degrees + k, differential times (-1)^k, action unchanged.
DgModule shift_module(const DgModule& m, int k);

/// Checks d f + f d = f0 - f1 for f of degree 1 between the underlying
/// complexes (the Koszul sign of a degree-1 morphism). StructuralError on
/// shape or degree mismatch.
bool is_homotopy(const DgModule& source, const DgModule& target, const IntMatrix& f,
                 const IntMatrix& f0, const IntMatrix& f1);

// ---------------------------------------------------------------------------
// iterated extensions

struct SubquotientCertificate {
  std::vector<std::int64_t> generator;  // coordinates in the module basis
  int shift = 0;
};

struct FiltrationLevel {
  double value = 0;
  std::vector<std::size_t> basis;  // module basis vectors first appearing here
  std::vector<SubquotientCertificate> certificates;
};

struct FilteredModuleData {
  DgAlgebra algebra;
  DgModule module;
  std::vector<FiltrationLevel> levels;  // ascending values
  Field field;
};

struct ExtensionSizeResult {
  bool ok = false;
  std::size_t size = 0;
  std::vector<std::size_t> per_level;
  std::optional<std::size_t> failed_level;
  std::string reason;
};

/// Verifies each level is a submodule, each certificate is a cycle of its
/// shift degree in the subquotient, and that sum_i A[b_i] -> Q_r, a -> z_i a
/// is a chain map with acyclic cone over the field. StructuralError when the
/// levels do not partition the basis.
ExtensionSizeResult extension_size(const FilteredModuleData& m);

struct SizeLowerBound {
  std::size_t bound = 0;  // dim_k H(M (x)_A k)
  std::size_t size = 0;   // extension_size
};

/// chi: A -> k must be a dg ring homomorphism (ValidationError otherwise).
/// Returns the total homology dimension of M (x)_A k, checked <= size.
SizeLowerBound size_lower_bound(const FilteredModuleData& m, const std::vector<FieldElement>& chi);

FieldMatrix to_field(const Field& k, const IntMatrix& m);

}  // namespace pinless
