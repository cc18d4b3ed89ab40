#pragma once

// Equivariant cellular chain complexes of universal covers for the built-in
// manifolds, their combinators, Stiefel-Whitney data and the torsion-lift
// test for w2.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pinless/field.hpp"
#include "pinless/groups.hpp"
#include "pinless/homology.hpp"
#include "pinless/twisted.hpp"

namespace pinless {

/// An element of the plain group ring Z[G], coefficient of g at index g.
using GroupRingElement = std::vector<std::int64_t>;

/// An F_2 cellular cochain on the cells of one degree, or unknown.
struct CellCochain {
  bool known = false;
  std::vector<std::uint8_t> values;

  static CellCochain unknown() { return {}; }
  static CellCochain zero(std::size_t cells) { return {true, std::vector<std::uint8_t>(cells, 0)}; }
  bool is_zero() const;
};

struct EquivariantCellComplex {
  std::string name;
  FiniteGroup group;
  TwoCocycle mu;
  std::vector<std::size_t> cells;
  /// boundary[i][r][c]: coefficient of cell r of degree i-1 in the boundary
  /// of cell c of degree i; boundary[0] is empty.
  std::vector<std::vector<std::vector<GroupRingElement>>> boundary;
  bool orientable = true;
  CellCochain w1;  // on 1-cells
  CellCochain w2;  // on 2-cells
  /// Modelling caveats carried into reports.
  std::vector<std::string> notes;

  std::size_t dimension() const { return cells.empty() ? 0 : cells.size() - 1; }
  std::size_t cell_count() const;
};

/// Checks shapes and d^2 = 0 over Z[G]; ValidationError names the degree.
void validate_complex(const EquivariantCellComplex& c);

EquivariantCellComplex real_projective_space(std::size_t n);
/// L(p; 1,...,1) of dimension 2m - 1.
EquivariantCellComplex lens_space(std::size_t p, std::size_t dim);
EquivariantCellComplex sphere(std::size_t n);
EquivariantCellComplex complex_projective_plane();
/// T^n modelled by the (Z/N)^n cover of the torus, see notes.
EquivariantCellComplex torus(std::size_t n, std::size_t cover = 2);
/// Tensor product over Z[G1 x G2] with the Koszul sign on the second factor.
EquivariantCellComplex product(const EquivariantCellComplex& a, const EquivariantCellComplex& b);
/// Trivial-group integral cell model of A # B: shared 0-cell and top cell.
/// Needs equal dimension >= 3, orientable summands with one 0-cell and one
/// top cell. UnsupportedError otherwise.
EquivariantCellComplex connected_sum(const EquivariantCellComplex& a,
                                     const EquivariantCellComplex& b);

/// Grammar: rp(n) | sphere(n) | lens(p,d) | torus(n) | torus(n,N) | cp2 |
/// product(a,b) | connsum(a,b) | connsum_power(a,r)
EquivariantCellComplex build(std::string_view spec);

/// The complex over Z obtained along G -> {e}.
IntegerChainComplex trivialize(const EquivariantCellComplex& c);

/// Each entry sum c_g g becomes sum c_g rho(g) (an m x m block for rank m).
/// ValidationError if d^2 != 0 afterwards.
FieldChainComplex specialize(const EquivariantCellComplex& c, const LocalSystem& rho);

/// The plain complex over k (trivial coefficients).
FieldChainComplex specialize_trivial(const EquivariantCellComplex& c, const Field& k);

/// True iff w2 lies in the mod-2 reduction of the torsion of H^2(L; Z).
/// ValidationError when w2 is unknown.
bool torsion_lift_test(const EquivariantCellComplex& c);
bool torsion_lift_test(const EquivariantCellComplex& c, const CellCochain& w2);

/// dim H_i(A # B) over k from the summands: interior degrees add, H_0 and
/// H_d are 1. Checked against the cell model.
HomologyProfile connected_sum_homology(const EquivariantCellComplex& a,
                                       const EquivariantCellComplex& b, const Field& k);

}  // namespace pinless
