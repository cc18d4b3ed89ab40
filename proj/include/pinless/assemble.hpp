#pragma once

// Complexes of free modules over the twisted groupoid endomorphism ring,
// assembled from generator/trajectory data or from a cell model, and their
// specializations along augmentations.

#include <optional>
#include <string>
#include <vector>

#include "pinless/dg.hpp"
#include "pinless/groupoid.hpp"
#include "pinless/homology.hpp"
#include "pinless/spaces.hpp"
#include "pinless/twisted.hpp"

namespace pinless {

struct ComplexGenerator {
  std::string label;
  std::optional<int> grading;
  std::optional<double> filtration;
};

/// A signed basis morphism (g0, g1); elements are group references.
struct ComplexTerm {
  std::string g0 = "e";
  std::string g1 = "e";
  std::int64_t sign = 1;
};

/// d(gamma_from) contains gamma_to * (sum of terms). Provenance is opaque.
struct ComplexEntry {
  std::string from;
  std::string to;
  std::vector<ComplexTerm> terms;
  std::string provenance;
};

struct ComplexSpec {
  std::vector<ComplexGenerator> generators;
  std::vector<ComplexEntry> entries;
  std::string group0 = "trivial";
  std::string group1 = "trivial";
  std::string mu0 = "[]";
  std::string mu1 = "[]";
  std::optional<DeltaConvention> convention;  // set for complexes built from cells
};

/// The groupoid named by the spec's group and cocycle fields.
TwistedGroupoid groupoid_of(const ComplexSpec& spec);

/// Terms of Delta(g): DOUBLE gives (g, g), INVERSE (-1)^{mu(g,g^-1)} (g^-1, g).
std::vector<std::pair<std::size_t, std::int64_t>> delta_terms(const TwistedGroupoid& g, GroupIndex x,
                                                              DeltaConvention convention);

/// One generator per cell (grading and filtration = cell degree), entries
/// obtained by pushing each boundary coefficient through Delta.
ComplexSpec complex_spec_from_cells(const EquivariantCellComplex& c, DeltaConvention convention);

struct AssembledComplex {
  TwistedGroupoid groupoid;
  std::vector<std::string> labels;
  bool graded = false;
  std::vector<int> degrees;        // all 0 when ungraded
  std::vector<double> filtration;
  /// differential[q][p] = phi_qp, with d(gamma_p) = sum_q gamma_q phi_qp.
  std::vector<std::vector<Morphism>> differential;
  std::optional<DeltaConvention> convention;

  std::size_t size() const { return labels.size(); }
};

/// Resolves labels, checks gradings, and checks d^2 = 0 in the endomorphism
/// ring. ValidationError names the first (target, source) pair and residual.
AssembledComplex assemble(const ComplexSpec& spec, const TwistedGroupoid& groupoid);
AssembledComplex assemble(const ComplexSpec& spec);

/// The differential specialized to a field.
struct SpecializedComplex {
  Field field;
  bool graded = false;
  std::vector<int> degrees;
  FieldMatrix d;
};

/// chi = eps0 (x) eps1 on the endomorphism ring. StructuralError when the
/// augmentations do not live on the groupoid's rings, or when the complex was
/// built under a different Delta convention.
SpecializedComplex specialize_augmented(const AssembledComplex& c, const Augmentation& eps0,
                                        const Augmentation& eps1);
SpecializedComplex specialize_augmented(const AssembledComplex& c, const Augmentation& eps,
                                        DeltaConvention convention);

/// The complex as one chain group per degree, when the differential lowers
/// a nonnegative integer grading by exactly one.
std::optional<FieldChainComplex> as_chain_complex(const SpecializedComplex& s);

/// Per-degree dims when as_chain_complex applies; (even, odd) dims for a Z/2
/// grading; the single total dimension when ungraded.
HomologyProfile specialized_homology(const SpecializedComplex& s);

/// The free module sum_p gamma_p A over A = End, filtered by the generator
/// filtration values, one certificate gamma_p per generator.
FilteredModuleData filtered_view(const AssembledComplex& c, const Field& k);

/// chi = eps0 (x) eps1 as a vector on the basis of End.
std::vector<FieldElement> augmentation_character(const TwistedGroupoid& g, const Augmentation& eps0,
                                                 const Augmentation& eps1);

}  // namespace pinless
