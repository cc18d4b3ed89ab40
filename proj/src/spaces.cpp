#include "pinless/spaces.hpp"

#include <algorithm>

#include "pinless/error.hpp"
#include "text.hpp"

namespace pinless {

bool CellCochain::is_zero() const {
  return known && std::all_of(values.begin(), values.end(), [](std::uint8_t v) { return v == 0; });
}

std::size_t EquivariantCellComplex::cell_count() const {
  std::size_t n = 0;
  for (auto c : cells) n += c;
  return n;
}

namespace {

GroupRingElement ring_zero(const FiniteGroup& g) { return GroupRingElement(g.size(), 0); }

GroupRingElement ring_basis(const FiniteGroup& g, GroupIndex a, std::int64_t c = 1) {
  auto x = ring_zero(g);
  x[a] = c;
  return x;
}

GroupRingElement ring_mul(const FiniteGroup& g, const GroupRingElement& x, const GroupRingElement& y) {
  auto out = ring_zero(g);
  for (GroupIndex a = 0; a < g.size(); ++a) {
    if (x[a] == 0) continue;
    for (GroupIndex b = 0; b < g.size(); ++b)
      if (y[b] != 0) out[g.mul(a, b)] += x[a] * y[b];
  }
  return out;
}

// x (x) y in Z[G1 x G2], pairs indexed a * |G2| + b
GroupRingElement ring_tensor(const GroupRingElement& x, const GroupRingElement& y) {
  GroupRingElement out(x.size() * y.size(), 0);
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < y.size(); ++b) out[a * y.size() + b] = x[a] * y[b];
  return out;
}

bool ring_is_zero(const GroupRingElement& x) {
  return std::all_of(x.begin(), x.end(), [](std::int64_t c) { return c == 0; });
}

// One cell per degree 0..n with the given boundaries (index i is the boundary of the i-cell).
EquivariantCellComplex one_cell_per_degree(std::string name, FiniteGroup g, TwoCocycle mu,
                                           const std::vector<GroupRingElement>& d) {
  EquivariantCellComplex c{std::move(name), g, std::move(mu), {}, {}, true, {}, {}, {}};
  c.cells.assign(d.size(), 1);
  c.boundary.resize(d.size());
  for (std::size_t i = 1; i < d.size(); ++i) c.boundary[i] = {{d[i]}};
  return c;
}

CellCochain cochain_of(std::size_t cells, bool value) {
  CellCochain c = CellCochain::zero(cells);
  if (value) std::fill(c.values.begin(), c.values.end(), 1);
  return c;
}

// cellular cross product alpha x beta on the product cells of degree i + j
// (cell order matches product()).
struct ProductIndex {
  const EquivariantCellComplex& a;
  const EquivariantCellComplex& b;

  // offset of the block (i, n - i) inside the degree-n cells
  std::size_t offset(std::size_t n, std::size_t i) const {
    std::size_t off = 0;
    for (std::size_t k = 0; k < i; ++k)
      if (n >= k && n - k < b.cells.size()) off += a.cells[k] * b.cells[n - k];
    return off;
  }
  std::size_t cells(std::size_t n) const { return offset(n, std::min(n + 1, a.cells.size())); }
  std::size_t index(std::size_t n, std::size_t i, std::size_t alpha, std::size_t beta) const {
    return offset(n, i) + alpha * b.cells[n - i] + beta;
  }
};

}  // namespace

void validate_complex(const EquivariantCellComplex& c) {
  const auto& g = c.group;
  if (c.boundary.size() != c.cells.size()) throw StructuralError(c.name + ": boundary list has wrong length");
  for (std::size_t i = 1; i < c.cells.size(); ++i) {
    const auto& d = c.boundary[i];
    if (d.size() != c.cells[i - 1]) throw StructuralError(c.name + ": boundary " + std::to_string(i) + " has wrong row count");
    for (const auto& row : d) {
      if (row.size() != c.cells[i]) throw StructuralError(c.name + ": boundary " + std::to_string(i) + " has wrong column count");
      for (const auto& e : row)
        if (e.size() != g.size()) throw StructuralError(c.name + ": group ring entry has wrong length");
    }
  }
  for (std::size_t i = 2; i < c.cells.size(); ++i) {
    for (std::size_t r = 0; r < c.cells[i - 2]; ++r)
      for (std::size_t col = 0; col < c.cells[i]; ++col) {
        auto sum = ring_zero(g);
        for (std::size_t k = 0; k < c.cells[i - 1]; ++k) {
          const auto p = ring_mul(g, c.boundary[i - 1][r][k], c.boundary[i][k][col]);
          for (std::size_t x = 0; x < sum.size(); ++x) sum[x] += p[x];
        }
        if (!ring_is_zero(sum)) {
          throw ValidationError(c.name + ": d^2 != 0 from degree " + std::to_string(i) + " (row " +
                                std::to_string(r) + ", column " + std::to_string(col) + ")");
        }
      }
  }
}

EquivariantCellComplex real_projective_space(std::size_t n) {
  if (n == 0) throw UnsupportedError("rp(0) is a point; use sphere(n) or n >= 1");
  const auto g = FiniteGroup::cyclic(2);
  std::vector<GroupRingElement> d(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    d[i] = {i % 2 ? -1 : 1, 1};  // x - 1 or x + 1
  }
  TwoCocycle mu(g);
  if (n % 2 == 0) mu.set(1, 1, 1);
  auto c = one_cell_per_degree("rp(" + std::to_string(n) + ")", g, mu, d);
  c.orientable = n % 2 == 1;
  // w(RP^n) = (1 + a)^{n+1}; a^k is dual to the k-cell
  c.w1 = cochain_of(1, (n + 1) % 2);
  c.w2 = cochain_of(n >= 2 ? 1 : 0, ((n + 1) * n / 2) % 2);
  return c;
}

EquivariantCellComplex lens_space(std::size_t p, std::size_t dim) {
  if (p < 2) throw UnsupportedError("lens(p,d) needs p >= 2");
  if (dim % 2 == 0 || dim == 0) throw UnsupportedError("lens(p,d) needs odd dimension d");
  if (p == 2) {
    auto c = real_projective_space(dim);
    c.name = "lens(2," + std::to_string(dim) + ")";
    return c;
  }
  const auto g = FiniteGroup::cyclic(p);
  std::vector<GroupRingElement> d(dim + 1);
  for (std::size_t i = 1; i <= dim; ++i) {
    if (i % 2) {
      d[i] = ring_basis(g, 1);
      d[i][0] = -1;
    } else {
      d[i] = GroupRingElement(p, 1);
    }
  }
  auto c = one_cell_per_degree("lens(" + std::to_string(p) + "," + std::to_string(dim) + ")", g,
                               TwoCocycle(g), d);
  c.w1 = CellCochain::zero(1);
  c.w2 = CellCochain::zero(dim >= 2 ? 1 : 0);
  return c;
}

EquivariantCellComplex sphere(std::size_t n) {
  if (n == 0) throw UnsupportedError("sphere(0) is disconnected");
  const auto g = FiniteGroup::trivial();
  EquivariantCellComplex c{"sphere(" + std::to_string(n) + ")", g, TwoCocycle(g), {}, {}, true, {}, {}, {}};
  c.cells.assign(n + 1, 0);
  c.cells[0] = c.cells[n] = 1;
  c.boundary.resize(n + 1);
  for (std::size_t i = 1; i <= n; ++i)
    c.boundary[i].assign(c.cells[i - 1], std::vector<GroupRingElement>(c.cells[i], ring_zero(g)));
  c.w1 = CellCochain::zero(c.cells[1]);
  c.w2 = CellCochain::zero(n >= 2 ? c.cells[2] : 0);
  return c;
}

EquivariantCellComplex complex_projective_plane() {
  auto c = sphere(4);
  c.name = "cp2";
  c.cells[2] = 1;
  for (std::size_t i = 1; i <= 4; ++i)
    c.boundary[i].assign(c.cells[i - 1], std::vector<GroupRingElement>(c.cells[i], ring_zero(c.group)));
  c.w1 = CellCochain::zero(0);
  c.w2 = cochain_of(1, true);  // c_1 mod 2 = 3h mod 2
  return c;
}

EquivariantCellComplex torus(std::size_t n, std::size_t cover) {
  if (n == 0 || cover == 0) throw UnsupportedError("torus(n,N) needs n >= 1 and N >= 1");
  const auto g = FiniteGroup::cyclic(cover);
  GroupRingElement d1 = ring_zero(g);
  d1[g.element("t")] += 1;
  d1[0] -= 1;
  auto circle = one_cell_per_degree("circle", g, TwoCocycle(g), {{}, d1});
  circle.w1 = CellCochain::zero(1);
  circle.w2 = CellCochain::zero(0);
  auto c = circle;
  for (std::size_t i = 1; i < n; ++i) c = product(c, circle);
  c.name = cover == 2 ? "torus(" + std::to_string(n) + ")"
                      : "torus(" + std::to_string(n) + "," + std::to_string(cover) + ")";
  c.notes = {"torus: pi_1 = Z^" + std::to_string(n) + " is replaced by its finite quotient (Z/" +
             std::to_string(cover) + ")^" + std::to_string(n) +
             "; local systems must factor through it"};
  return c;
}

EquivariantCellComplex product(const EquivariantCellComplex& a, const EquivariantCellComplex& b) {
  const auto g = FiniteGroup::direct_product(a.group, b.group);
  EquivariantCellComplex c{"product(" + a.name + "," + b.name + ")", g,
                           product_cocycle(a.mu, b.mu), {}, {}, a.orientable && b.orientable,
                           {}, {}, {}};
  const ProductIndex idx{a, b};
  const std::size_t dim = a.dimension() + b.dimension();
  for (std::size_t n = 0; n <= dim; ++n) c.cells.push_back(idx.cells(n));
  c.boundary.resize(dim + 1);
  const auto ea = ring_basis(a.group, a.group.identity());
  const auto eb = ring_basis(b.group, b.group.identity());
  for (std::size_t n = 1; n <= dim; ++n) {
    auto& d = c.boundary[n];
    d.assign(c.cells[n - 1], std::vector<GroupRingElement>(c.cells[n], ring_zero(g)));
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
      if (n < i || n - i >= b.cells.size()) continue;
      const std::size_t j = n - i;
      for (std::size_t al = 0; al < a.cells[i]; ++al)
        for (std::size_t be = 0; be < b.cells[j]; ++be) {
          const std::size_t col = idx.index(n, i, al, be);
          if (i > 0)
            for (std::size_t r = 0; r < a.cells[i - 1]; ++r)
              d[idx.index(n - 1, i - 1, r, be)][col] = ring_tensor(a.boundary[i][r][al], eb);
          if (j > 0)
            for (std::size_t r = 0; r < b.cells[j - 1]; ++r) {
              auto x = ring_tensor(ea, b.boundary[j][r][be]);
              if (i % 2)
                for (auto& v : x) v = -v;
              d[idx.index(n - 1, i, al, r)][col] = x;
            }
        }
    }
  }

  const auto cross = [&](std::size_t n, const CellCochain& x, std::size_t i, const CellCochain& y,
                         CellCochain& out) {
    for (std::size_t al = 0; al < a.cells[i]; ++al)
      for (std::size_t be = 0; be < b.cells[n - i]; ++be)
        out.values[idx.index(n, i, al, be)] ^= x.values[al] & y.values[be];
  };
  const auto one_a = cochain_of(a.cells[0], true);
  const auto one_b = cochain_of(b.cells[0], true);
  const auto has = [](const EquivariantCellComplex& x, std::size_t k) { return x.cells.size() > k; };
  if (a.w1.known && b.w1.known) {
    c.w1 = CellCochain::zero(dim >= 1 ? c.cells[1] : 0);
    if (has(a, 1)) cross(1, a.w1, 1, one_b, c.w1);
    if (has(b, 1)) cross(1, one_a, 0, b.w1, c.w1);
  }
  if (a.w1.known && b.w1.known && a.w2.known && b.w2.known) {
    // Whitney: w2(A x B) = w2 x 1 + w1 x w1 + 1 x w2
    c.w2 = CellCochain::zero(dim >= 2 ? c.cells[2] : 0);
    if (has(a, 2)) cross(2, a.w2, 2, one_b, c.w2);
    if (has(a, 1) && has(b, 1)) cross(2, a.w1, 1, b.w1, c.w2);
    if (has(b, 2)) cross(2, one_a, 0, b.w2, c.w2);
  }
  c.notes = a.notes;
  c.notes.insert(c.notes.end(), b.notes.begin(), b.notes.end());
  return c;
}

EquivariantCellComplex connected_sum(const EquivariantCellComplex& a,
                                     const EquivariantCellComplex& b) {
  const std::size_t d = a.dimension();
  if (b.dimension() != d) throw UnsupportedError("connsum needs summands of equal dimension");
  if (d < 3) throw UnsupportedError("connsum needs dimension >= 3");
  for (const auto* x : {&a, &b}) {
    if (!x->orientable) throw UnsupportedError("connsum needs orientable summands: " + x->name);
    if (x->cells[0] != 1 || x->cells[d] != 1) {
      throw UnsupportedError("connsum needs one 0-cell and one top cell: " + x->name);
    }
  }
  const auto g = FiniteGroup::trivial();
  EquivariantCellComplex c{"connsum(" + a.name + "," + b.name + ")", g, TwoCocycle(g), {}, {}, true,
                           {}, {}, {}};
  const auto ia = trivialize(a);
  const auto ib = trivialize(b);
  c.cells.assign(d + 1, 1);
  for (std::size_t i = 1; i < d; ++i) c.cells[i] = a.cells[i] + b.cells[i];
  c.boundary.resize(d + 1);
  // row offset of the b-block in degree i (0 where the cell is shared)
  const auto off = [&](std::size_t i) { return (i == 0 || i == d) ? 0 : a.cells[i]; };
  for (std::size_t i = 1; i <= d; ++i) {
    auto& m = c.boundary[i];
    m.assign(c.cells[i - 1], std::vector<GroupRingElement>(c.cells[i], ring_zero(g)));
    const auto place = [&](const IntegerMatrix& src, std::size_t ro, std::size_t co) {
      for (std::size_t r = 0; r < src.rows(); ++r)
        for (std::size_t col = 0; col < src.cols(); ++col)
          m[ro + r][co + col][0] += static_cast<std::int64_t>(src.at(r, col));
    };
    place(ia.boundary[i], 0, 0);
    place(ib.boundary[i], off(i - 1), off(i));
  }
  const auto concat = [](const CellCochain& x, const CellCochain& y) {
    if (!x.known || !y.known) return CellCochain::unknown();
    CellCochain out = x;
    out.values.insert(out.values.end(), y.values.begin(), y.values.end());
    return out;
  };
  c.w1 = concat(a.w1, b.w1);
  c.w2 = concat(a.w2, b.w2);
  c.notes = a.notes;
  c.notes.insert(c.notes.end(), b.notes.begin(), b.notes.end());
  c.notes.push_back("connsum: homology-level model over the trivial group (no free-product cover)");
  std::sort(c.notes.begin(), c.notes.end());
  c.notes.erase(std::unique(c.notes.begin(), c.notes.end()), c.notes.end());
  return c;
}

EquivariantCellComplex build(std::string_view spec) {
  const auto call = text::parse_call(spec);
  const auto arg = [&](std::size_t i) {
    const auto v = text::parse_int(call.args[i]);
    if (v < 0) throw ParseError("negative size in '" + std::string(spec) + "'");
    return static_cast<std::size_t>(v);
  };
  const auto n = call.args.size();
  EquivariantCellComplex out = [&] {
    if (call.name == "rp" && n == 1) return real_projective_space(arg(0));
    if (call.name == "sphere" && n == 1) return sphere(arg(0));
    if (call.name == "lens" && n == 2) return lens_space(arg(0), arg(1));
    if (call.name == "torus" && n == 1) return torus(arg(0));
    if (call.name == "torus" && n == 2) return torus(arg(0), arg(1));
    if (call.name == "cp2" && n == 0) return complex_projective_plane();
    if (call.name == "product" && n == 2) return product(build(call.args[0]), build(call.args[1]));
    if (call.name == "connsum" && n == 2) return connected_sum(build(call.args[0]), build(call.args[1]));
    if (call.name == "connsum_power" && n == 2) {
      const auto base = build(call.args[0]);
      const auto r = arg(1);
      if (r == 0) throw ParseError("connsum_power needs r >= 1");
      auto c = base;
      for (std::size_t i = 1; i < r; ++i) c = connected_sum(c, base);
      return c;
    }
    throw ParseError("unknown space '" + std::string(spec) + "'");
  }();
  validate_complex(out);
  return out;
}

IntegerChainComplex trivialize(const EquivariantCellComplex& c) {
  IntegerChainComplex out{c.cells, std::vector<IntegerMatrix>(c.cells.size())};
  for (std::size_t i = 1; i < c.cells.size(); ++i) {
    IntegerMatrix m(c.cells[i - 1], c.cells[i]);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t col = 0; col < m.cols(); ++col) {
        std::int64_t s = 0;
        for (auto v : c.boundary[i][r][col]) s += v;
        m.at(r, col) = s;
      }
    out.boundary[i] = std::move(m);
  }
  return out;
}

FieldChainComplex specialize(const EquivariantCellComplex& c, const LocalSystem& rho) {
  if (!(rho.group() == c.group)) {
    throw StructuralError("local system group " + rho.group().spec() + " does not match " +
                          c.group.spec());
  }
  const Field& k = rho.field();
  const std::size_t m = rho.rank();
  FieldChainComplex out{k, {}, std::vector<FieldMatrix>(c.cells.size(), FieldMatrix(k, 0, 0))};
  for (auto n : c.cells) out.cells.push_back(n * m);
  for (std::size_t i = 1; i < c.cells.size(); ++i) {
    FieldMatrix d(k, out.cells[i - 1], out.cells[i]);
    for (std::size_t r = 0; r < c.cells[i - 1]; ++r)
      for (std::size_t col = 0; col < c.cells[i]; ++col) {
        const auto& entry = c.boundary[i][r][col];
        for (GroupIndex g = 0; g < entry.size(); ++g) {
          if (entry[g] == 0) continue;
          const FieldElement coeff = k.from_int(entry[g]);
          const FieldMatrix& block = rho.matrix(g);
          for (std::size_t x = 0; x < m; ++x)
            for (std::size_t y = 0; y < m; ++y) {
              const auto pos_r = r * m + x, pos_c = col * m + y;
              d.set(pos_r, pos_c, k.add(d.at(pos_r, pos_c), k.mul(coeff, block.at(x, y))));
            }
        }
      }
    out.boundary[i] = std::move(d);
  }
  check_d_squared(out);
  return out;
}

FieldChainComplex specialize_trivial(const EquivariantCellComplex& c, const Field& k) {
  return specialize(c, LocalSystem::trivial(c.group, k));
}

bool torsion_lift_test(const EquivariantCellComplex& c) { return torsion_lift_test(c, c.w2); }

bool torsion_lift_test(const EquivariantCellComplex& c, const CellCochain& w2) {
  if (!w2.known) throw ValidationError(c.name + ": w2 is unknown, torsion-lift test not possible");
  const std::size_t c2 = c.cells.size() > 2 ? c.cells[2] : 0;
  if (w2.values.size() != c2) throw StructuralError(c.name + ": w2 cochain has the wrong length");
  if (w2.is_zero()) return true;
  const auto z = trivialize(c);
  // delta^1 = (boundary_2)^T : C^1 -> C^2
  const IntegerMatrix delta1 = z.boundary[2].transpose();
  const auto snf = smith_normal_form(delta1);
  // the saturation of im delta^1 is spanned by columns i of U^{-1} with d_i != 0;
  // modulo im delta^1 these are exactly the torsion classes of H^2
  std::vector<BitVector> columns;
  for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
    BitVector col(bit_words(c2), 0);
    for (std::size_t r = 0; r < c2; ++r)
      if (static_cast<int>(snf.u_inv.at(r, i) % 2) != 0) set_bit(col, r, true);
    columns.push_back(std::move(col));
  }
  BitVector target(bit_words(c2), 0);
  for (std::size_t r = 0; r < c2; ++r)
    if (w2.values[r]) set_bit(target, r, true);
  return f2_solve(columns, target, c2).has_value();
}

HomologyProfile connected_sum_homology(const EquivariantCellComplex& a,
                                       const EquivariantCellComplex& b, const Field& k) {
  const auto ha = homology_dims(specialize_trivial(a, k));
  const auto hb = homology_dims(specialize_trivial(b, k));
  const std::size_t d = a.dimension();
  if (b.dimension() != d || d < 3) throw UnsupportedError("connsum needs equal dimension >= 3");
  std::vector<std::size_t> dims(d + 1, 0);
  dims[0] = dims[d] = 1;
  for (std::size_t i = 1; i < d; ++i) dims[i] = ha.ranks[i] + hb.ranks[i];
  const auto formula = field_profile(dims);
  const auto model = homology_dims(specialize_trivial(connected_sum(a, b), k));
  if (!(model == formula)) {
    throw ValidationError("connected sum cell model " + model.to_string() +
                          " disagrees with the summand formula " + formula.to_string());
  }
  return formula;
}

}  // namespace pinless
