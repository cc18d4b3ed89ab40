#include "pinless/field.hpp"

#include <charconv>
#include <cctype>
#include <string>

#include "pinless/error.hpp"

namespace pinless {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

std::uint32_t parse_uint(std::string_view s) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("expected an unsigned integer, got '" + std::string(s) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) throw StructuralError("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1u << 16)) throw UnsupportedError("field characteristic must be below 65536");
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  require_prime(p);
  return Field(p, 1, 0, 0);
}

Field Field::quadratic(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
  require_prime(p);
  a %= p;
  b %= p;
  // irreducible iff no root in F_p
  for (std::uint64_t x = 0; x < p; ++x) {
    if ((x * x + a * x + b) % p == 0) {
      throw StructuralError("t^2 + " + std::to_string(a) + "t + " + std::to_string(b) +
                            " is reducible over F_" + std::to_string(p));
    }
  }
  return Field(p, 2, a, b);
}

Field Field::quadratic(std::uint32_t p) {
  require_prime(p);
  for (std::uint32_t a = 0; a < p; ++a) {
    for (std::uint32_t b = 1; b < p; ++b) {
      bool has_root = false;
      for (std::uint64_t x = 0; x < p && !has_root; ++x) {
        has_root = (x * x + std::uint64_t{a} * x + b) % p == 0;
      }
      if (!has_root) return Field(p, 2, a, b);
    }
  }
  throw StructuralError("no irreducible quadratic found");  // unreachable for primes
}

Field Field::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() < 5 || s.substr(0, 3) != "gf(" || s.back() != ')') {
    throw ParseError("field spec must look like gf(p) or gf(p^2), got '" + std::string(text) + "'");
  }
  std::string_view inner = trim(s.substr(3, s.size() - 4));
  if (auto caret = inner.find('^'); caret != std::string_view::npos) {
    const std::uint32_t p = parse_uint(trim(inner.substr(0, caret)));
    const std::uint32_t e = parse_uint(trim(inner.substr(caret + 1)));
    if (e == 1) return prime(p);
    if (e != 2) throw UnsupportedError("only extension degrees 1 and 2 are supported");
    return quadratic(p);
  }
  const std::uint32_t q = parse_uint(inner);
  if (is_prime(q)) return prime(q);
  for (std::uint32_t p = 2; p * p <= q; ++p) {
    if (p * p == q && is_prime(p)) return quadratic(p);
  }
  throw StructuralError("gf(" + std::to_string(q) + "): order must be p or p^2");
}

FieldElement Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

FieldElement Field::generator_t() const {
  if (degree_ != 2) throw StructuralError("prime field has no adjoined root");
  return {p_};
}

FieldElement Field::make(std::uint32_t c0, std::uint32_t c1) const {
  if (degree_ == 1 && c1 % p_ != 0) throw StructuralError("prime field element with t-component");
  return {c0 % p_ + (c1 % p_) * p_};
}

FieldElement Field::add(FieldElement x, FieldElement y) const {
  if (degree_ == 1) {
    const std::uint32_t s = x.code + y.code;
    return {s >= p_ ? s - p_ : s};
  }
  return make(c0(x) + c0(y), c1(x) + c1(y));
}

FieldElement Field::neg(FieldElement x) const {
  if (degree_ == 1) return {x.code == 0 ? 0 : p_ - x.code};
  return make((p_ - c0(x)) % p_, (p_ - c1(x)) % p_);
}

FieldElement Field::sub(FieldElement x, FieldElement y) const { return add(x, neg(y)); }

FieldElement Field::mul(FieldElement x, FieldElement y) const {
  const std::uint64_t p = p_;
  if (degree_ == 1) return {static_cast<std::uint32_t>(std::uint64_t{x.code} * y.code % p)};
  const std::uint64_t x0 = c0(x), x1 = c1(x), y0 = c0(y), y1 = c1(y);
  // (x0 + x1 t)(y0 + y1 t) with t^2 = -a t - b
  const std::uint64_t hh = x1 * y1 % p;
  const std::uint64_t r0 = (x0 * y0 + (p - b_) * hh) % p;
  const std::uint64_t r1 = (x0 * y1 + x1 * y0 + (p - a_) * hh) % p;
  return {static_cast<std::uint32_t>(r0 + r1 * p)};
}

FieldElement Field::pow(FieldElement x, std::uint64_t e) const {
  FieldElement result = one();
  while (e > 0) {
    if (e & 1u) result = mul(result, x);
    x = mul(x, x);
    e >>= 1;
  }
  return result;
}

FieldElement Field::inv(FieldElement x) const {
  if (is_zero(x)) throw StructuralError("inverse of zero in " + spec());
  return pow(x, order() - 2);
}

bool Field::is_square(FieldElement x) const {
  if (is_zero(x)) return true;
  return pow(x, (order() - 1) / 2) == one() || order() % 2 == 0;
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out(order());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = {i};
  return out;
}

std::vector<FieldElement> Field::units() const {
  std::vector<FieldElement> out;
  out.reserve(order() - 1);
  for (std::uint32_t i = 1; i < order(); ++i) out.push_back({i});
  return out;
}

std::string Field::to_string(FieldElement x) const {
  if (degree_ == 1) return std::to_string(x.code);
  const std::uint32_t u = c0(x), v = c1(x);
  if (v == 0) return std::to_string(u);
  std::string tpart = (v == 1 ? std::string("t") : std::to_string(v) + "t");
  if (u == 0) return tpart;
  return std::to_string(u) + "+" + tpart;
}

FieldElement Field::parse_element(std::string_view text) const {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty field element");
  bool negative = false;
  if (s.front() == '-') {
    negative = true;
    s = trim(s.substr(1));
  }
  FieldElement value = zero();
  while (!s.empty()) {
    const std::size_t plus = s.find('+');
    std::string_view term = trim(s.substr(0, plus));
    s = plus == std::string_view::npos ? std::string_view{} : s.substr(plus + 1);
    if (term.empty()) throw ParseError("malformed field element '" + std::string(text) + "'");
    if (term.back() == 't') {
      std::string_view coef = trim(term.substr(0, term.size() - 1));
      const std::uint32_t c = coef.empty() ? 1 : parse_uint(coef);
      value = add(value, mul(from_int(c), generator_t()));
    } else {
      value = add(value, from_int(parse_uint(term)));
    }
  }
  return negative ? neg(value) : value;
}

std::string Field::spec() const {
  return degree_ == 1 ? "gf(" + std::to_string(p_) + ")" : "gf(" + std::to_string(p_) + "^2)";
}

}  // namespace pinless
