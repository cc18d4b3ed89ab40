#include "pinless/assemble.hpp"

#include <algorithm>
#include <map>

#include "pinless/error.hpp"

namespace pinless {

TwistedGroupoid groupoid_of(const ComplexSpec& spec) {
  const auto g0 = FiniteGroup::parse(spec.group0);
  const auto g1 = FiniteGroup::parse(spec.group1);
  return TwistedGroupoid(TwoCocycle::parse(g0, spec.mu0), TwoCocycle::parse(g1, spec.mu1));
}

std::vector<std::pair<std::size_t, std::int64_t>> delta_terms(const TwistedGroupoid& g, GroupIndex x,
                                                              DeltaConvention convention) {
  if (!(g.group0() == g.group1()) || !(g.mu0() == g.mu1())) {
    throw StructuralError("Delta needs the same twisted group on both factors");
  }
  if (convention == DeltaConvention::Double) return {{g.index(x, x), 1}};
  const GroupIndex inv = g.group0().inverse(x);
  return {{g.index(inv, x), g.mu0()(x, inv) ? -1 : 1}};
}

ComplexSpec complex_spec_from_cells(const EquivariantCellComplex& c, DeltaConvention convention) {
  const TwistedGroupoid g(c.mu, c.mu);
  ComplexSpec spec;
  spec.group0 = spec.group1 = c.group.spec();
  spec.mu0 = spec.mu1 = c.mu.to_string();
  spec.convention = convention;
  const auto label = [](std::size_t deg, std::size_t i) {
    return "c" + std::to_string(deg) + "_" + std::to_string(i);
  };
  for (std::size_t deg = 0; deg < c.cells.size(); ++deg)
    for (std::size_t i = 0; i < c.cells[deg]; ++i)
      spec.generators.push_back({label(deg, i), static_cast<int>(deg), static_cast<double>(deg)});
  for (std::size_t deg = 1; deg < c.cells.size(); ++deg)
    for (std::size_t r = 0; r < c.cells[deg - 1]; ++r)
      for (std::size_t col = 0; col < c.cells[deg]; ++col) {
        ComplexEntry entry{label(deg, col), label(deg - 1, r), {}, "cell boundary"};
        const auto& coeffs = c.boundary[deg][r][col];
        for (GroupIndex x = 0; x < coeffs.size(); ++x) {
          if (coeffs[x] == 0) continue;
          for (const auto& [idx, sign] : delta_terms(g, x, convention)) {
            entry.terms.push_back({g.group0().label(g.part0(idx)), g.group1().label(g.part1(idx)),
                                   sign * coeffs[x]});
          }
        }
        if (!entry.terms.empty()) spec.entries.push_back(std::move(entry));
      }
  return spec;
}

AssembledComplex assemble(const ComplexSpec& spec, const TwistedGroupoid& groupoid) {
  const std::size_t n = spec.generators.size();
  AssembledComplex out{groupoid, {}, false, {}, {}, {}, spec.convention};
  std::map<std::string, std::size_t> index;
  std::size_t declared = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& gen = spec.generators[i];
    if (!index.emplace(gen.label, i).second) throw StructuralError("duplicate generator '" + gen.label + "'");
    out.labels.push_back(gen.label);
    out.degrees.push_back(gen.grading.value_or(0));
    out.filtration.push_back(gen.filtration.value_or(gen.grading ? *gen.grading : static_cast<double>(i)));
    declared += gen.grading.has_value();
  }
  if (declared != 0 && declared != n) throw StructuralError("gradings must be given for all generators or none");
  out.graded = n > 0 && declared == n;

  const auto resolve = [&](const std::string& label) {
    auto it = index.find(label);
    if (it == index.end()) throw StructuralError("unknown generator '" + label + "'");
    return it->second;
  };
  out.differential.assign(n, std::vector<Morphism>(n, groupoid.zero(0, 0)));
  for (const auto& entry : spec.entries) {
    const std::size_t p = resolve(entry.from), q = resolve(entry.to);
    if (out.graded && (out.degrees[p] - out.degrees[q]) % 2 == 0) {
      throw StructuralError("entry " + entry.from + " -> " + entry.to + " joins generators of equal parity");
    }
    for (const auto& t : entry.terms) {
      const auto g0 = groupoid.group0().element(t.g0);
      const auto g1 = groupoid.group1().element(t.g1);
      out.differential[q][p] = groupoid.add(out.differential[q][p], groupoid.basis(0, 0, g0, g1, t.sign));
    }
  }

  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t p = 0; p < n; ++p) {
      Morphism residual = groupoid.zero(0, 0);
      for (std::size_t q = 0; q < n; ++q) {
        if (out.differential[r][q].is_zero() || out.differential[q][p].is_zero()) continue;
        residual = groupoid.add(residual, groupoid.compose(out.differential[r][q], out.differential[q][p]));
      }
      if (!residual.is_zero()) {
        throw ValidationError("d^2 != 0 from " + out.labels[p] + " to " + out.labels[r] +
                              ": residual " + groupoid.to_string(residual));
      }
    }
  return out;
}

AssembledComplex assemble(const ComplexSpec& spec) { return assemble(spec, groupoid_of(spec)); }

std::vector<FieldElement> augmentation_character(const TwistedGroupoid& g, const Augmentation& eps0,
                                                 const Augmentation& eps1) {
  if (!(eps0.ring.cocycle() == g.mu0()) || !(eps1.ring.cocycle() == g.mu1())) {
    throw StructuralError("augmentation is not defined on the groupoid's twisted rings");
  }
  if (!(eps0.field == eps1.field)) throw StructuralError("augmentations take values in different fields");
  const Field& k = eps0.field;
  std::vector<FieldElement> chi(g.basis_size());
  for (std::size_t i = 0; i < chi.size(); ++i) chi[i] = k.mul(eps0.images[g.part0(i)], eps1.images[g.part1(i)]);
  return chi;
}

SpecializedComplex specialize_augmented(const AssembledComplex& c, const Augmentation& eps0,
                                        const Augmentation& eps1) {
  const auto chi = augmentation_character(c.groupoid, eps0, eps1);
  const Field& k = eps0.field;
  const std::size_t n = c.size();
  SpecializedComplex out{k, c.graded, c.degrees, FieldMatrix(k, n, n)};
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t p = 0; p < n; ++p) {
      FieldElement v = k.zero();
      const auto& coeffs = c.differential[q][p].coeffs;
      for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) v = k.add(v, k.mul(k.from_int(coeffs[i]), chi[i]));
      out.d.set(q, p, v);
    }
  if (!(out.d * out.d).is_zero()) throw ValidationError("specialized differential has d^2 != 0");
  return out;
}

SpecializedComplex specialize_augmented(const AssembledComplex& c, const Augmentation& eps,
                                        DeltaConvention convention) {
  if (c.convention && *c.convention != convention) {
    throw StructuralError("complex was assembled under Delta = " + to_string(*c.convention) +
                          ", not " + to_string(convention));
  }
  return specialize_augmented(c, eps, eps);
}

std::optional<FieldChainComplex> as_chain_complex(const SpecializedComplex& s) {
  const std::size_t n = s.degrees.size();
  if (!s.graded || n == 0) return std::nullopt;
  if (*std::min_element(s.degrees.begin(), s.degrees.end()) < 0) return std::nullopt;
  const Field& k = s.field;
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t p = 0; p < n; ++p)
      if (!k.is_zero(s.d.at(q, p)) && s.degrees[q] != s.degrees[p] - 1) return std::nullopt;
  const std::size_t top = static_cast<std::size_t>(*std::max_element(s.degrees.begin(), s.degrees.end()));
  std::vector<std::vector<std::size_t>> by_degree(top + 1);
  for (std::size_t i = 0; i < n; ++i) by_degree[s.degrees[i]].push_back(i);
  FieldChainComplex out{k, {}, {}};
  for (const auto& v : by_degree) out.cells.push_back(v.size());
  out.boundary.emplace_back(k, 0, 0);
  for (std::size_t deg = 1; deg <= top; ++deg) {
    FieldMatrix b(k, by_degree[deg - 1].size(), by_degree[deg].size());
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t col = 0; col < b.cols(); ++col) b.set(r, col, s.d.at(by_degree[deg - 1][r], by_degree[deg][col]));
    out.boundary.push_back(std::move(b));
  }
  return out;
}

HomologyProfile specialized_homology(const SpecializedComplex& s) {
  if (auto chain = as_chain_complex(s)) return homology_dims(*chain);
  const std::size_t n = s.degrees.size();
  if (!s.graded) return field_profile({n - 2 * rank(s.d)});
  // Z/2 grading: d swaps the parity classes
  std::vector<std::size_t> cls[2];
  for (std::size_t i = 0; i < n; ++i) cls[((s.degrees[i] % 2) + 2) % 2].push_back(i);
  std::size_t r[2];  // rank of d out of each class
  for (int from = 0; from < 2; ++from) {
    const auto& src = cls[from];
    const auto& dst = cls[1 - from];
    FieldMatrix block(s.field, dst.size(), src.size());
    for (std::size_t a = 0; a < dst.size(); ++a)
      for (std::size_t b = 0; b < src.size(); ++b) block.set(a, b, s.d.at(dst[a], src[b]));
    r[from] = rank(block);
  }
  return field_profile({cls[0].size() - r[0] - r[1], cls[1].size() - r[1] - r[0]});
}

FilteredModuleData filtered_view(const AssembledComplex& c, const Field& k) {
  DgAlgebra a = algebra_from_groupoid(c.groupoid);
  a.grading.modulus = c.graded ? 2 : 1;
  const std::size_t na = a.dim(), n = c.size();
  DgModule m;
  m.grading = a.grading;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t j = 0; j < na; ++j) m.degrees.push_back(a.grading.normalize(c.degrees[p]));
  m.d.assign(n * na, std::vector<std::int64_t>(n * na, 0));
  m.action.assign(na, IntMatrix(n * na, std::vector<std::int64_t>(n * na, 0)));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t j = 0; j < na; ++j) {
      // (gamma_p e_j) e_x = gamma_p (e_j e_x)
      for (std::size_t x = 0; x < na; ++x)
        for (std::size_t t = 0; t < na; ++t) m.action[x][p * na + t][p * na + j] = a.mult[j][x][t];
      // d(gamma_p e_j) = sum_q gamma_q (phi_qp e_j)
      for (std::size_t q = 0; q < n; ++q) {
        const auto& phi = c.differential[q][p].coeffs;
        for (std::size_t i = 0; i < na; ++i) {
          if (phi[i] == 0) continue;
          for (std::size_t t = 0; t < na; ++t) m.d[q * na + t][p * na + j] += phi[i] * a.mult[i][j][t];
        }
      }
    }
  std::map<double, FiltrationLevel> levels;
  for (std::size_t p = 0; p < n; ++p) {
    auto& level = levels[c.filtration[p]];
    level.value = c.filtration[p];
    for (std::size_t j = 0; j < na; ++j) level.basis.push_back(p * na + j);
    std::vector<std::int64_t> z(n * na, 0);
    z[p * na + a.unit] = 1;
    level.certificates.push_back({std::move(z), c.degrees[p]});
  }
  FilteredModuleData out{std::move(a), std::move(m), {}, k};
  for (auto& [value, level] : levels) out.levels.push_back(std::move(level));
  return out;
}

}  // namespace pinless
