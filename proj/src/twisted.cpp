#include "pinless/twisted.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

#include "pinless/error.hpp"

namespace pinless {

TwistedRing::TwistedRing(TwoCocycle mu, std::optional<Field> field)
    : mu_(std::move(mu)), field_(std::move(field)) {
  if (auto why = describe_cocycle_failure(mu_)) {
    throw StructuralError("twisted ring needs a normalized 2-cocycle: " + *why);
  }
}

// ---------------------------------------------------------------------------
// elements

namespace {

std::int64_t add_coeff(const TwistedRing& r, std::int64_t a, std::int64_t b) {
  if (!r.field()) return a + b;
  return r.field()->add({static_cast<std::uint32_t>(a)}, {static_cast<std::uint32_t>(b)}).code;
}

std::int64_t mul_coeff(const TwistedRing& r, std::int64_t a, std::int64_t b) {
  if (!r.field()) return a * b;
  return r.field()->mul({static_cast<std::uint32_t>(a)}, {static_cast<std::uint32_t>(b)}).code;
}

std::int64_t neg_coeff(const TwistedRing& r, std::int64_t a) {
  if (!r.field()) return -a;
  return r.field()->neg({static_cast<std::uint32_t>(a)}).code;
}

void require_same(const TwistedRingElement& a, const TwistedRingElement& b) {
  if (!(a.ring == b.ring)) throw StructuralError("twisted ring elements carry different ring tags");
}

}  // namespace

TwistedRingElement TwistedRingElement::zero(const TwistedRing& ring) {
  return {ring, std::vector<std::int64_t>(ring.size(), 0)};
}

TwistedRingElement TwistedRingElement::basis(const TwistedRing& ring, GroupIndex g,
                                             std::int64_t c) {
  auto out = zero(ring);
  out.coeffs.at(g) = ring.field() ? ring.field()->from_int(c).code : c;
  return out;
}

bool TwistedRingElement::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t c) { return c == 0; });
}

std::string TwistedRingElement::to_string() const {
  std::string out;
  const auto& g = ring.group();
  for (GroupIndex a = 0; a < coeffs.size(); ++a) {
    if (coeffs[a] == 0) continue;
    std::string c = ring.field() ? ring.field()->to_string({static_cast<std::uint32_t>(coeffs[a])})
                                 : std::to_string(coeffs[a]);
    if (!out.empty()) out += " + ";
    out += c + "[" + g.label(a) + "]";
  }
  return out.empty() ? "0" : out;
}

TwistedRingElement twisted_add(const TwistedRingElement& a, const TwistedRingElement& b) {
  require_same(a, b);
  auto out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i)
    out.coeffs[i] = add_coeff(a.ring, a.coeffs[i], b.coeffs[i]);
  return out;
}

TwistedRingElement twisted_neg(const TwistedRingElement& a) {
  auto out = a;
  for (auto& c : out.coeffs) c = neg_coeff(a.ring, c);
  return out;
}

TwistedRingElement twisted_mul(const TwistedRingElement& a, const TwistedRingElement& b) {
  require_same(a, b);
  const auto& ring = a.ring;
  const auto& group = ring.group();
  const auto& mu = ring.cocycle();
  auto out = TwistedRingElement::zero(ring);
  for (GroupIndex g = 0; g < group.size(); ++g) {
    if (a.coeffs[g] == 0) continue;
    for (GroupIndex h = 0; h < group.size(); ++h) {
      if (b.coeffs[h] == 0) continue;
      std::int64_t c = mul_coeff(ring, a.coeffs[g], b.coeffs[h]);
      if (mu(g, h)) c = neg_coeff(ring, c);
      auto& slot = out.coeffs[group.mul(g, h)];
      slot = add_coeff(ring, slot, c);
    }
  }
  return out;
}

bool twisted_product_is_unital_associative(const TwoCocycle& mu) {
  const auto& g = mu.group();
  const GroupIndex e = g.identity();
  for (GroupIndex a = 0; a < g.size(); ++a)
    if (mu(e, a) || mu(a, e)) return false;
  // ([a][b])[c] carries mu(a,b)+mu(ab,c); [a]([b][c]) carries mu(b,c)+mu(a,bc)
  for (GroupIndex a = 0; a < g.size(); ++a)
    for (GroupIndex b = 0; b < g.size(); ++b)
      for (GroupIndex c = 0; c < g.size(); ++c)
        if ((mu(a, b) ^ mu(g.mul(a, b), c)) != (mu(b, c) ^ mu(a, g.mul(b, c)))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Z[i]

GaussianIsomorphism check_gaussian_isomorphism(const TwistedRing& ring) {
  const auto& g = ring.group();
  if (g.size() != 2) {
    throw UnsupportedError("Gaussian isomorphism check needs the group Z/2, got " + g.spec());
  }
  if (ring.field()) throw StructuralError("Gaussian isomorphism check needs integer coefficients");
  const GroupIndex e = g.identity();
  const GroupIndex x = 1 - e;

  GaussianIsomorphism out;
  if (!ring.cocycle()(x, x)) {
    out.reason = "mu(x,x) = 0 so x*x = +e, while i*i = -1";
    return out;
  }
  using Gaussian = std::pair<std::int64_t, std::int64_t>;
  std::vector<Gaussian> phi(2);
  phi[e] = {1, 0};
  phi[x] = {0, 1};
  const auto gmul = [](Gaussian a, Gaussian b) {
    return Gaussian{a.first * b.first - a.second * b.second, a.first * b.second + a.second * b.first};
  };
  // multiplicative on every basis pair, read through the twisted product
  for (GroupIndex a = 0; a < 2; ++a) {
    for (GroupIndex b = 0; b < 2; ++b) {
      const auto prod = twisted_mul(TwistedRingElement::basis(ring, a),
                                    TwistedRingElement::basis(ring, b));
      Gaussian image{0, 0};
      for (GroupIndex c = 0; c < 2; ++c) {
        image.first += prod.coeffs[c] * phi[c].first;
        image.second += prod.coeffs[c] * phi[c].second;
      }
      if (image != gmul(phi[a], phi[b])) {
        out.reason = "witness fails on [" + g.label(a) + "][" + g.label(b) + "]";
        return out;
      }
    }
  }
  // the images of the basis form a Z-basis of Z[i]: determinant +-1
  const std::int64_t det = phi[e].first * phi[x].second - phi[e].second * phi[x].first;
  if (det != 1 && det != -1) {
    out.reason = "witness is not bijective";
    return out;
  }
  out.isomorphic = true;
  out.witness = phi;
  out.reason = "e -> 1, x -> i is a unital ring isomorphism onto Z[t]/(t^2+1)";
  return out;
}

// ---------------------------------------------------------------------------
// augmentations

bool Augmentation::satisfies_invariant() const {
  const auto& g = ring.group();
  const auto& mu = ring.cocycle();
  if (images.size() != g.size() || images[g.identity()] != field.one()) return false;
  for (GroupIndex a = 0; a < g.size(); ++a) {
    if (field.is_zero(images[a])) return false;
    for (GroupIndex b = 0; b < g.size(); ++b) {
      FieldElement rhs = images[g.mul(a, b)];
      if (mu(a, b)) rhs = field.neg(rhs);
      if (field.mul(images[a], images[b]) != rhs) return false;
    }
  }
  return true;
}

std::string Augmentation::to_string() const {
  std::string out;
  const auto& g = ring.group();
  for (GroupIndex a = 0; a < g.size(); ++a) {
    if (a == g.identity()) continue;
    if (!out.empty()) out += ", ";
    out += g.label(a) + "->" + field.to_string(images[a]);
  }
  return out.empty() ? "trivial" : out;
}

std::vector<Augmentation> enumerate_augmentations(const TwistedRing& ring, const Field& field) {
  const auto& g = ring.group();
  const auto& mu = ring.cocycle();
  const auto gens = g.generators();
  const auto units = field.units();
  const std::size_t choices = units.size();

  std::vector<Augmentation> found;
  std::vector<std::size_t> pick(gens.size(), 0);
  while (true) {
    // propagate eps(a s) = (-1)^{mu(a,s)} eps(a) eps(s) from e along generators
    std::vector<std::optional<FieldElement>> eps(g.size());
    eps[g.identity()] = field.one();
    std::deque<GroupIndex> queue{g.identity()};
    bool consistent = true;
    while (!queue.empty() && consistent) {
      const GroupIndex a = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < gens.size() && consistent; ++i) {
        const GroupIndex b = g.mul(a, gens[i]);
        FieldElement v = field.mul(*eps[a], units[pick[i]]);
        if (mu(a, gens[i])) v = field.neg(v);
        if (!eps[b]) {
          eps[b] = v;
          queue.push_back(b);
        } else if (*eps[b] != v) {
          consistent = false;
        }
      }
    }
    if (consistent) {
      Augmentation aug{ring, field, {}};
      for (const auto& v : eps) aug.images.push_back(*v);
      if (aug.satisfies_invariant()) found.push_back(std::move(aug));
    }

    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == choices) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  std::sort(found.begin(), found.end(), [](const Augmentation& a, const Augmentation& b) {
    return a.images < b.images;
  });
  return found;
}

// ---------------------------------------------------------------------------
// local systems

std::string to_string(DeltaConvention c) { return c == DeltaConvention::Double ? "DOUBLE" : "INVERSE"; }

DeltaConvention parse_delta(std::string_view text) {
  std::string lower(text);
  for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (lower == "double") return DeltaConvention::Double;
  if (lower == "inverse") return DeltaConvention::Inverse;
  throw ParseError("unknown Delta convention '" + std::string(text) + "' (double|inverse)");
}

LocalSystem::LocalSystem(FiniteGroup group, Field field, std::vector<FieldMatrix> monodromy)
    : group_(std::move(group)), field_(std::move(field)), monodromy_(std::move(monodromy)) {
  if (monodromy_.size() != group_.size()) {
    throw StructuralError("local system needs one matrix per group element");
  }
  const std::size_t m = monodromy_.front().rows();
  if (m == 0) throw StructuralError("local system rank must be positive");
  for (const auto& mat : monodromy_) {
    if (mat.rows() != m || mat.cols() != m || !(mat.field() == field_)) {
      throw StructuralError("local system matrices must be square of equal rank over one field");
    }
  }
  if (!(monodromy_[group_.identity()] == FieldMatrix::identity(field_, m))) {
    throw ValidationError("local system: rho(e) is not the identity");
  }
  for (GroupIndex a = 0; a < group_.size(); ++a)
    for (GroupIndex b = 0; b < group_.size(); ++b)
      if (!(monodromy_[a] * monodromy_[b] == monodromy_[group_.mul(a, b)])) {
        throw ValidationError("local system is not a representation: rho(" + group_.label(a) +
                              ") rho(" + group_.label(b) + ") != rho(" +
                              group_.label(group_.mul(a, b)) + ")");
      }
}

LocalSystem LocalSystem::character(FiniteGroup group, Field field,
                                   std::vector<FieldElement> values) {
  if (values.size() != group.size()) throw StructuralError("character needs one value per element");
  std::vector<FieldMatrix> mats;
  for (auto v : values) {
    FieldMatrix m(field, 1, 1);
    m.set(0, 0, v);
    mats.push_back(std::move(m));
  }
  return LocalSystem(std::move(group), std::move(field), std::move(mats));
}

LocalSystem LocalSystem::trivial(FiniteGroup group, Field field) {
  std::vector<FieldElement> ones(group.size(), field.one());
  return character(std::move(group), std::move(field), std::move(ones));
}

LocalSystem LocalSystem::from_values(FiniteGroup group, Field field,
                                     const std::map<GroupIndex, FieldElement>& values) {
  std::vector<std::optional<FieldElement>> rho(group.size());
  rho[group.identity()] = field.one();
  std::deque<GroupIndex> queue{group.identity()};
  while (!queue.empty()) {
    const GroupIndex a = queue.front();
    queue.pop_front();
    for (auto [s, v] : values) {
      const GroupIndex b = group.mul(a, s);
      const FieldElement w = field.mul(*rho[a], v);
      if (!rho[b]) {
        rho[b] = w;
        queue.push_back(b);
      } else if (*rho[b] != w) {
        throw ValidationError("monodromy values are inconsistent at " + group.label(b));
      }
    }
  }
  std::vector<FieldElement> out;
  for (GroupIndex a = 0; a < group.size(); ++a) {
    if (!rho[a]) throw ValidationError("monodromy values do not generate " + group.spec());
    out.push_back(*rho[a]);
  }
  return character(std::move(group), std::move(field), std::move(out));
}

FieldElement LocalSystem::value(GroupIndex g) const {
  if (rank() != 1) throw StructuralError("value() needs a rank-1 local system");
  return monodromy_[g].at(0, 0);
}

std::vector<FieldElement> LocalSystem::values() const {
  std::vector<FieldElement> out;
  for (GroupIndex g = 0; g < group_.size(); ++g) out.push_back(value(g));
  return out;
}

LocalSystem delta_monodromy(const Augmentation& eps, DeltaConvention convention) {
  const auto& g = eps.ring.group();
  const auto& mu = eps.ring.cocycle();
  const Field& k = eps.field;
  std::vector<FieldElement> rho(g.size());
  for (GroupIndex a = 0; a < g.size(); ++a) {
    if (convention == DeltaConvention::Double) {
      rho[a] = k.mul(eps.images[a], eps.images[a]);
    } else {
      const GroupIndex inv = g.inverse(a);
      FieldElement tilde = eps.images[inv];
      if (mu(a, inv)) tilde = k.neg(tilde);
      rho[a] = k.mul(eps.images[a], tilde);
    }
  }
  return LocalSystem::character(g, k, std::move(rho));
}

Augmentation flip_basis_sign(const Augmentation& eps, GroupIndex g) {
  const auto& group = eps.ring.group();
  if (g == group.identity()) throw StructuralError("the unit's basis sign is fixed");
  OneCochain indicator(group.size(), 0);
  indicator[g] = 1;
  Augmentation out{TwistedRing(eps.ring.cocycle() + coboundary(group, indicator)), eps.field,
                   eps.images};
  out.images[g] = eps.field.neg(out.images[g]);
  return out;
}

TwoCocycle product_cocycle(const TwoCocycle& mu1, const TwoCocycle& mu2) {
  const auto& g1 = mu1.group();
  const auto& g2 = mu2.group();
  const auto g = FiniteGroup::direct_product(g1, g2);
  const std::size_t n2 = g2.size();
  TwoCocycle mu(g);
  for (GroupIndex a = 0; a < g.size(); ++a)
    for (GroupIndex b = 0; b < g.size(); ++b)
      mu.set(a, b, mu1(a / n2, b / n2) ^ mu2(a % n2, b % n2));
  return mu;
}

}  // namespace pinless
