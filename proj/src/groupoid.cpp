#include "pinless/groupoid.hpp"

#include <algorithm>

#include "pinless/error.hpp"

namespace pinless {

bool Morphism::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t c) { return c == 0; });
}

TwistedGroupoid::TwistedGroupoid(TwoCocycle mu0, TwoCocycle mu1, std::size_t objects)
    : mu0_(std::move(mu0)), mu1_(std::move(mu1)), objects_(objects) {
  if (objects_ == 0) throw StructuralError("groupoid needs the basepoint object");
  for (const auto* mu : {&mu0_, &mu1_}) {
    if (auto why = describe_cocycle_failure(*mu)) throw StructuralError("groupoid cocycle: " + *why);
  }
}

void TwistedGroupoid::check_object(std::size_t y) const {
  if (y >= objects_) throw StructuralError("object " + std::to_string(y) + " out of range");
}

Morphism TwistedGroupoid::zero(std::size_t target, std::size_t source) const {
  check_object(target);
  check_object(source);
  return {target, source, std::vector<std::int64_t>(basis_size(), 0)};
}

Morphism TwistedGroupoid::basis(std::size_t target, std::size_t source, GroupIndex g0,
                                GroupIndex g1, std::int64_t sign) const {
  auto m = zero(target, source);
  m.coeffs.at(index(g0, g1)) = sign;
  return m;
}

Morphism TwistedGroupoid::identity(std::size_t y) const {
  return basis(y, y, group0().identity(), group1().identity());
}

Morphism TwistedGroupoid::add(const Morphism& a, const Morphism& b) const {
  if (a.target != b.target || a.source != b.source) {
    throw StructuralError("adding morphisms between different objects");
  }
  auto out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

Morphism TwistedGroupoid::scale(const Morphism& a, std::int64_t c) const {
  auto out = a;
  for (auto& x : out.coeffs) x *= c;
  return out;
}

Morphism TwistedGroupoid::compose(const Morphism& f, const Morphism& g) const {
  if (f.source != g.target) {
    throw StructuralError("compose: source of the left morphism (" + std::to_string(f.source) +
                          ") differs from target of the right one (" + std::to_string(g.target) + ")");
  }
  const auto& G0 = group0();
  const auto& G1 = group1();
  auto out = zero(f.target, g.source);
  for (std::size_t i = 0; i < basis_size(); ++i) {
    if (f.coeffs[i] == 0) continue;
    const GroupIndex a0 = part0(i), a1 = part1(i);
    for (std::size_t j = 0; j < basis_size(); ++j) {
      if (g.coeffs[j] == 0) continue;
      const GroupIndex b0 = part0(j), b1 = part1(j);
      std::int64_t c = f.coeffs[i] * g.coeffs[j];
      if (mu0_(b0, a0) ^ mu1_(a1, b1)) c = -c;
      out.coeffs[index(G0.mul(b0, a0), G1.mul(a1, b1))] += c;
    }
  }
  return out;
}

Morphism TwistedGroupoid::invert(const Morphism& f) const {
  std::size_t support = 0, at = 0;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i] != 0) {
      ++support;
      at = i;
    }
  }
  if (support != 1 || (f.coeffs[at] != 1 && f.coeffs[at] != -1)) {
    throw StructuralError("invert needs a signed basis morphism");
  }
  const GroupIndex g0 = part0(at), g1 = part1(at);
  const GroupIndex h0 = group0().inverse(g0), h1 = group1().inverse(g1);
  std::int64_t sign = f.coeffs[at];
  if (mu0_(g0, h0) ^ mu1_(g1, h1)) sign = -sign;
  return basis(f.source, f.target, h0, h1, sign);
}

std::string TwistedGroupoid::to_string(const Morphism& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.coeffs.size(); ++i) {
    const auto c = m.coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const auto mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "(" + group0().label(part0(i)) + "," + group1().label(part1(i)) + ")";
  }
  return out.empty() ? "0" : out;
}

EndomorphismRingWitness endomorphism_ring(const TwistedGroupoid& g) {
  const TwistedRing r0(g.mu0());
  const TwistedRing r1(g.mu1());
  EndomorphismRingWitness out;
  if (!(g.compose(g.identity(0), g.identity(0)) == g.identity(0))) {
    out.reason = "identity is not idempotent";
    return out;
  }
  for (std::size_t i = 0; i < g.basis_size(); ++i) {
    for (std::size_t j = 0; j < g.basis_size(); ++j) {
      const auto lhs = g.compose(g.basis(0, 0, g.part0(i), g.part1(i)),
                                 g.basis(0, 0, g.part0(j), g.part1(j)));
      // (a0 (x) a1)(b0 (x) b1) = (a0 *op b0) (x) (a1 b1), all in degree 0
      const auto left = twisted_mul(TwistedRingElement::basis(r0, g.part0(j)),
                                    TwistedRingElement::basis(r0, g.part0(i)));
      const auto right = twisted_mul(TwistedRingElement::basis(r1, g.part1(i)),
                                     TwistedRingElement::basis(r1, g.part1(j)));
      auto rhs = g.zero(0, 0);
      for (GroupIndex a = 0; a < g.group0().size(); ++a)
        for (GroupIndex b = 0; b < g.group1().size(); ++b)
          rhs.coeffs[g.index(a, b)] = left.coeffs[a] * right.coeffs[b];
      ++out.products_checked;
      if (!(lhs == rhs)) {
        out.reason = "product of basis elements " + g.to_string(g.basis(0, 0, g.part0(i), g.part1(i))) +
                     " and " + g.to_string(g.basis(0, 0, g.part0(j), g.part1(j))) + " disagrees";
        return out;
      }
    }
  }
  out.valid = true;
  out.reason = "identity on basis is a unital ring isomorphism";
  return out;
}

}  // namespace pinless
