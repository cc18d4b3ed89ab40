#include "pinless/clifford.hpp"

#include <bit>
#include <map>

#include "pinless/error.hpp"

namespace pinless {

std::string to_string(CliffordSign s) { return s == CliffordSign::Plus ? "+" : "-"; }

CliffordSign parse_clifford_sign(std::string_view text) {
  if (text == "+" || text == "plus") return CliffordSign::Plus;
  if (text == "-" || text == "minus") return CliffordSign::Minus;
  throw ParseError("Clifford sign must be + or -, got '" + std::string(text) + "'");
}

std::pair<int, std::uint32_t> blade_product(std::uint32_t a, std::uint32_t b, CliffordSign sigma) {
  // move each vector of b leftwards past the vectors of a above it
  int swaps = 0;
  for (std::uint32_t rest = a >> 1; rest != 0; rest >>= 1) swaps += std::popcount(rest & b);
  int sign = (swaps & 1) ? -1 : 1;
  if (sigma == CliffordSign::Minus && (std::popcount(a & b) & 1)) sign = -sign;
  return {sign, a ^ b};
}

CliffordElement::CliffordElement(unsigned n, CliffordSign sigma)
    : n_(n), sigma_(sigma), coeffs_(std::size_t{1} << n) {
  if (n > 16) throw UnsupportedError("Clifford algebras are limited to n <= 16");
}

CliffordElement CliffordElement::scalar(unsigned n, CliffordSign sigma, Rational c) {
  return blade(n, sigma, 0, std::move(c));
}

CliffordElement CliffordElement::blade(unsigned n, CliffordSign sigma, std::uint32_t mask,
                                       Rational c) {
  CliffordElement x(n, sigma);
  if (mask >> n) throw StructuralError("blade outside the algebra");
  x.coeffs_[mask] = std::move(c);
  return x;
}

CliffordElement CliffordElement::vector(CliffordSign sigma, const RationalVector& v) {
  CliffordElement x(static_cast<unsigned>(v.size()), sigma);
  for (std::size_t i = 0; i < v.size(); ++i) x.coeffs_[std::uint32_t{1} << i] = v[i];
  return x;
}

CliffordElement CliffordElement::reverse() const {
  CliffordElement out = *this;
  for (std::uint32_t m = 0; m < coeffs_.size(); ++m) {
    const int k = std::popcount(m);
    if ((k * (k - 1) / 2) & 1) out.coeffs_[m] = -out.coeffs_[m];
  }
  return out;
}

bool CliffordElement::is_vector() const {
  for (std::uint32_t m = 0; m < coeffs_.size(); ++m)
    if (std::popcount(m) != 1 && coeffs_[m] != 0) return false;
  return true;
}

RationalVector CliffordElement::vector_part() const {
  RationalVector v(n_);
  for (unsigned i = 0; i < n_; ++i) v[i] = coeffs_[std::uint32_t{1} << i];
  return v;
}

std::string CliffordElement::to_string() const {
  std::string out;
  for (std::uint32_t m = 0; m < coeffs_.size(); ++m) {
    if (coeffs_[m] == 0) continue;
    if (!out.empty()) out += " + ";
    out += coeffs_[m].str();
    for (unsigned i = 0; i < n_; ++i)
      if (m >> i & 1u) out += "*e" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

void CliffordElement::require_compatible(const CliffordElement& o) const {
  if (n_ != o.n_ || sigma_ != o.sigma_) {
    throw StructuralError("Clifford elements differ in dimension or sign convention");
  }
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
  require_compatible(o);
  CliffordElement out = *this;
  for (std::size_t m = 0; m < coeffs_.size(); ++m) out.coeffs_[m] += o.coeffs_[m];
  return out;
}

CliffordElement CliffordElement::operator-() const {
  CliffordElement out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CliffordElement CliffordElement::operator*(const CliffordElement& o) const {
  require_compatible(o);
  CliffordElement out(n_, sigma_);
  for (std::uint32_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a] == 0) continue;
    for (std::uint32_t b = 0; b < o.coeffs_.size(); ++b) {
      if (o.coeffs_[b] == 0) continue;
      const auto [sign, m] = blade_product(a, b, sigma_);
      if (sign > 0) out.coeffs_[m] += coeffs_[a] * o.coeffs_[b];
      else out.coeffs_[m] -= coeffs_[a] * o.coeffs_[b];
    }
  }
  return out;
}

CliffordElement CliffordElement::operator*(const Rational& c) const {
  CliffordElement out = *this;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

Rational inner(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw StructuralError("inner product of vectors of different length");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

PinElement::PinElement(unsigned n, CliffordSign sigma, std::vector<RationalVector> factors, int sign)
    : factors_(std::move(factors)), value_(CliffordElement::scalar(n, sigma, sign < 0 ? -1 : 1)) {
  for (const auto& v : factors_) {
    if (v.size() != n) throw StructuralError("Pin factor has the wrong dimension");
    if (inner(v, v) != 1) throw StructuralError("Pin factor is not a unit vector");
    value_ = value_ * CliffordElement::vector(sigma, v);
  }
}

RationalVector pin_action(const PinElement& x, const RationalVector& v) {
  if (v.size() != x.dim()) throw StructuralError("pin_action: vector has the wrong dimension");
  const std::size_t k = x.factors().size();
  // a unit vector u has u^{-1} = sigma u, so x^{-1} = sigma^k rev(x)
  Rational scale = (k & 1u) ? -1 : 1;
  if (x.convention() == CliffordSign::Minus && (k & 1u)) scale = -scale;
  const auto image =
      x.value() * CliffordElement::vector(x.convention(), v) * x.value().reverse() * scale;
  if (!image.is_vector()) throw ValidationError("pin_action produced a non-vector");
  return image.vector_part();
}

RationalMatrix projection_matrix(const PinElement& x) {
  const unsigned n = x.dim();
  RationalMatrix m(n, RationalVector(n));
  for (unsigned j = 0; j < n; ++j) {
    RationalVector e(n);
    e[j] = 1;
    const auto col = pin_action(x, e);
    for (unsigned i = 0; i < n; ++i) m[i][j] = col[i];
  }
  return m;
}

namespace {

std::string key(const RationalMatrix& m) {
  std::string s;
  for (const auto& row : m)
    for (const auto& c : row) s += c.str() + ",";
  return s;
}

RationalVector basis_vector(unsigned n, unsigned i) {
  RationalVector e(n);
  e[i] = 1;
  return e;
}

}  // namespace

bool verify_two_to_one(unsigned n, CliffordSign sigma, unsigned max_factors) {
  std::map<std::string, std::vector<CliffordElement>> fibres;
  std::vector<unsigned> word;
  const auto record = [&](const std::vector<unsigned>& w) {
    std::vector<RationalVector> factors;
    for (unsigned i : w) factors.push_back(basis_vector(n, i));
    for (int sign : {1, -1}) {
      PinElement x(n, sigma, factors, sign);
      auto& fibre = fibres[key(projection_matrix(x))];
      bool seen = false;
      for (const auto& y : fibre) seen = seen || y == x.value();
      if (!seen) fibre.push_back(x.value());
    }
  };
  // enumerate all words of length <= max_factors
  for (unsigned len = 0; len <= max_factors; ++len) {
    word.assign(len, 0);
    while (true) {
      record(word);
      unsigned i = 0;
      while (i < len && ++word[i] == n) word[i++] = 0;
      if (i == len) break;
    }
  }
  for (const auto& [_, fibre] : fibres) {
    if (fibre.size() != 2 || !(fibre[0] == -fibre[1])) return false;
  }
  return true;
}

std::string to_string(PreimageGroup g) { return g == PreimageGroup::Z4 ? "Z4" : "KleinFour"; }

ReflectionPreimage reflection_preimage_group(unsigned n, CliffordSign sigma) {
  if (n == 0) throw StructuralError("reflection_preimage_group needs n >= 1");
  const PinElement e1(n, sigma, {basis_vector(n, 0)});
  const PinElement one(n, sigma, {});
  const auto reflection = projection_matrix(e1);
  RationalMatrix id(n, RationalVector(n));
  for (unsigned i = 0; i < n; ++i) id[i][i] = 1;
  if (!(projection_matrix(one) == id) || reflection == id) {
    throw ValidationError("projection does not separate 1 and e1");
  }
  ReflectionPreimage out;
  out.elements = {one.value(), -one.value(), e1.value(), -e1.value()};
  out.order_of_e1 = 1;
  for (auto p = e1.value(); !(p == one.value()); p = p * e1.value()) ++out.order_of_e1;
  out.type = out.order_of_e1 == 4 ? PreimageGroup::Z4 : PreimageGroup::KleinFour;
  return out;
}

RationalVector stereographic_unit_vector(const RationalVector& t) {
  Rational s = inner(t, t);
  RationalVector u;
  for (const auto& c : t) u.push_back(2 * c / (s + 1));
  u.push_back((s - 1) / (s + 1));
  return u;
}

TorsorElement flip(const TorsorElement& t) { return {t.left, t.right, !t.flipped}; }

TorsorElement unit_torsor(const std::string& end, bool flipped) { return {end, end, flipped}; }

TorsorElement glue_torsors(const TorsorElement& t1, const TorsorElement& t2) {
  if (t1.right != t2.left) {
    throw StructuralError("cannot glue torsors: end data '" + t1.right + "' and '" + t2.left +
                          "' differ");
  }
  return {t1.left, t2.right, t1.flipped != t2.flipped};
}

int orientation_line_sign(const TorsorElement& t) { return t.flipped ? -1 : 1; }

}  // namespace pinless
