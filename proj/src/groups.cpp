#include "pinless/groups.hpp"

#include <algorithm>
#include <numeric>

#include "pinless/error.hpp"
#include "pinless/linalg.hpp"
#include "text.hpp"

namespace pinless {

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup FiniteGroup::from_table(std::vector<std::string> labels,
                                    std::vector<std::vector<GroupIndex>> table, std::string spec) {
  const std::size_t n = labels.size();
  if (n == 0) throw StructuralError("group must have at least one element");
  if (table.size() != n) throw StructuralError("multiplication table has wrong number of rows");
  auto impl = std::make_shared<Impl>();
  impl->table.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      throw StructuralError("multiplication table row " + std::to_string(a) + " is not total");
    }
    for (GroupIndex c : table[a]) {
      if (c >= n) throw StructuralError("multiplication table entry out of range");
      impl->table.push_back(c);
    }
  }
  const auto at = [&](GroupIndex a, GroupIndex b) { return impl->table[a * n + b]; };

  std::optional<GroupIndex> identity;
  for (GroupIndex e = 0; e < n && !identity; ++e) {
    bool unit = true;
    for (GroupIndex g = 0; g < n && unit; ++g) unit = at(e, g) == g && at(g, e) == g;
    if (unit) identity = e;
  }
  if (!identity) throw StructuralError("multiplication table has no two-sided identity");
  impl->identity = *identity;

  for (GroupIndex a = 0; a < n; ++a)
    for (GroupIndex b = 0; b < n; ++b)
      for (GroupIndex c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) {
          throw StructuralError("multiplication table is not associative at (" + labels[a] + "," +
                                labels[b] + "," + labels[c] + ")");
        }

  impl->inverse.assign(n, n);
  for (GroupIndex a = 0; a < n; ++a) {
    for (GroupIndex b = 0; b < n; ++b) {
      if (at(a, b) == *identity && at(b, a) == *identity) {
        impl->inverse[a] = b;
        break;
      }
    }
    if (impl->inverse[a] == n) throw StructuralError("element " + labels[a] + " has no inverse");
  }
  impl->labels = std::move(labels);
  impl->spec = std::move(spec);
  return FiniteGroup(std::move(impl));
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw StructuralError("z(0) is not a finite group");
  auto impl = std::make_shared<Impl>();
  impl->labels.resize(n);
  impl->table.resize(n * n);
  impl->inverse.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    impl->labels[a] = std::to_string(a);
    impl->inverse[a] = (n - a) % n;
    for (std::size_t b = 0; b < n; ++b) impl->table[a * n + b] = (a + b) % n;
  }
  impl->identity = 0;
  impl->spec = n == 1 ? "trivial" : "z(" + std::to_string(n) + ")";
  impl->cyclic = true;
  return FiniteGroup(std::move(impl));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.size(), nh = h.size(), n = ng * nh;
  auto impl = std::make_shared<Impl>();
  impl->labels.resize(n);
  impl->table.resize(n * n);
  impl->inverse.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t a1 = a / nh, a2 = a % nh;
    impl->labels[a] = "(" + g.label(a1) + "," + h.label(a2) + ")";
    impl->inverse[a] = g.inverse(a1) * nh + h.inverse(a2);
    for (std::size_t b = 0; b < n; ++b) {
      impl->table[a * n + b] = g.mul(a1, b / nh) * nh + h.mul(a2, b % nh);
    }
  }
  impl->identity = g.identity() * nh + h.identity();
  impl->spec = "prod(" + g.spec() + "," + h.spec() + ")";
  impl->factors = {ng, nh};
  return FiniteGroup(std::move(impl));
}

FiniteGroup FiniteGroup::parse(std::string_view spec) {
  const auto call = text::parse_call(spec);
  if (call.name == "trivial" && call.args.empty()) return trivial();
  if (call.name == "z" && call.args.size() == 1) {
    const auto n = text::parse_int(call.args[0]);
    if (n < 1) throw ParseError("z(n) needs n >= 1");
    return cyclic(static_cast<std::size_t>(n));
  }
  if (call.name == "prod" && call.args.size() == 2) {
    return direct_product(parse(call.args[0]), parse(call.args[1]));
  }
  throw ParseError("unknown group spec '" + std::string(spec) + "' (expected z(n) or prod(a,b))");
}

std::size_t FiniteGroup::order_of(GroupIndex a) const {
  std::size_t k = 1;
  for (GroupIndex x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (GroupIndex a = 0; a < size(); ++a)
    for (GroupIndex b = a + 1; b < size(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

GroupIndex FiniteGroup::element(std::string_view ref) const {
  const std::string_view s = text::trim(ref);
  for (GroupIndex a = 0; a < size(); ++a)
    if (label(a) == s) return a;
  if (s == "e") return identity();
  if (impl_->cyclic && !s.empty() && (s.front() == 't' || s.front() == 'x')) {
    std::int64_t power = 1;
    if (s.size() > 1) {
      if (s[1] != '^') throw ParseError("unknown group element '" + std::string(s) + "'");
      power = text::parse_int(s.substr(2));
    }
    const auto n = static_cast<std::int64_t>(size());
    return static_cast<GroupIndex>(((power % n) + n) % n);
  }
  if (text::is_integer(s)) {
    const auto i = text::parse_int(s);
    if (i >= 0 && static_cast<std::size_t>(i) < size()) return static_cast<GroupIndex>(i);
  }
  throw ParseError("unknown element '" + std::string(s) + "' of " + spec());
}

std::vector<GroupIndex> FiniteGroup::generators() const {
  std::vector<bool> in_subgroup(size(), false);
  in_subgroup[identity()] = true;
  std::vector<GroupIndex> gens;
  for (GroupIndex g = 0; g < size(); ++g) {
    if (in_subgroup[g]) continue;
    gens.push_back(g);
    // close under multiplication by all generators
    std::vector<GroupIndex> frontier;
    for (GroupIndex a = 0; a < size(); ++a)
      if (in_subgroup[a]) frontier.push_back(a);
    while (!frontier.empty()) {
      const GroupIndex a = frontier.back();
      frontier.pop_back();
      for (GroupIndex s : gens) {
        const GroupIndex b = mul(a, s);
        if (!in_subgroup[b]) {
          in_subgroup[b] = true;
          frontier.push_back(b);
        }
      }
    }
  }
  return gens;
}

// ---------------------------------------------------------------------------
// TwoCocycle

TwoCocycle::TwoCocycle(FiniteGroup group)
    : group_(std::move(group)), bits_(group_.size() * group_.size(), 0) {}

TwoCocycle::TwoCocycle(FiniteGroup group, const std::vector<std::vector<int>>& values)
    : TwoCocycle(std::move(group)) {
  const std::size_t n = group_.size();
  if (values.size() != n) throw StructuralError("cocycle table has wrong number of rows");
  for (std::size_t a = 0; a < n; ++a) {
    if (values[a].size() != n) throw StructuralError("cocycle table is not total");
    for (std::size_t b = 0; b < n; ++b) {
      if (values[a][b] != 0 && values[a][b] != 1) {
        throw StructuralError("cocycle values must be bits");
      }
      bits_[a * n + b] = static_cast<std::uint8_t>(values[a][b]);
    }
  }
}

TwoCocycle TwoCocycle::from_pairs(FiniteGroup group,
                                  const std::vector<std::pair<GroupIndex, GroupIndex>>& ones) {
  TwoCocycle mu(std::move(group));
  for (auto [a, b] : ones) {
    if (a >= mu.group_.size() || b >= mu.group_.size()) {
      throw StructuralError("cocycle pair out of range");
    }
    mu.set(a, b, 1);
  }
  return mu;
}

TwoCocycle TwoCocycle::parse(FiniteGroup group, std::string_view literal) {
  std::string_view s = text::trim(literal);
  if (s.empty() || s == "0" || s == "[]") return TwoCocycle(std::move(group));
  if (s.front() == '[' && s.back() == ']') s = text::trim(s.substr(1, s.size() - 2));
  std::vector<std::pair<GroupIndex, GroupIndex>> ones;
  for (std::string_view item : text::split_top_level(s)) {
    if (item.size() < 2 || item.front() != '(' || item.back() != ')') {
      throw ParseError("cocycle literal items must be (g,h) pairs, got '" + std::string(item) + "'");
    }
    const auto parts = text::split_top_level(item.substr(1, item.size() - 2));
    if (parts.size() != 2) throw ParseError("cocycle pair needs two elements");
    ones.emplace_back(group.element(parts[0]), group.element(parts[1]));
  }
  return from_pairs(std::move(group), ones);
}

bool TwoCocycle::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b == 0; });
}

std::vector<std::pair<GroupIndex, GroupIndex>> TwoCocycle::support() const {
  std::vector<std::pair<GroupIndex, GroupIndex>> out;
  const std::size_t n = group_.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if ((*this)(a, b)) out.emplace_back(a, b);
  return out;
}

std::string TwoCocycle::to_string() const {
  std::string out;
  for (auto [a, b] : support()) {
    if (!out.empty()) out += ",";
    out += "(" + group_.label(a) + "," + group_.label(b) + ")";
  }
  return out.empty() ? "0" : out;
}

TwoCocycle TwoCocycle::operator+(const TwoCocycle& other) const {
  if (!(group_ == other.group_)) throw StructuralError("adding cocycles on different groups");
  TwoCocycle out = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] ^= other.bits_[i];
  return out;
}

TwoCocycle coboundary(const FiniteGroup& group, const OneCochain& nu) {
  if (nu.size() != group.size()) throw StructuralError("1-cochain has wrong length");
  TwoCocycle out(group);
  for (GroupIndex g = 0; g < group.size(); ++g)
    for (GroupIndex h = 0; h < group.size(); ++h)
      out.set(g, h, nu[g] ^ nu[h] ^ nu[group.mul(g, h)]);
  return out;
}

bool is_normalized(const TwoCocycle& mu) {
  const auto& g = mu.group();
  for (GroupIndex a = 0; a < g.size(); ++a)
    if (mu(g.identity(), a) || mu(a, g.identity())) return false;
  return true;
}

std::optional<std::string> describe_cocycle_failure(const TwoCocycle& mu) {
  const auto& g = mu.group();
  for (GroupIndex a = 0; a < g.size(); ++a) {
    if (mu(g.identity(), a) || mu(a, g.identity())) {
      return "not normalized at element " + g.label(a);
    }
  }
  for (GroupIndex a = 0; a < g.size(); ++a)
    for (GroupIndex b = 0; b < g.size(); ++b)
      for (GroupIndex c = 0; c < g.size(); ++c)
        if ((mu(a, b) ^ mu(g.mul(a, b), c)) != (mu(b, c) ^ mu(a, g.mul(b, c)))) {
          return "cocycle identity fails at (" + g.label(a) + "," + g.label(b) + "," +
                 g.label(c) + ")";
        }
  return std::nullopt;
}

bool validate_cocycle(const TwoCocycle& mu) { return !describe_cocycle_failure(mu).has_value(); }

// ---------------------------------------------------------------------------
// H^2 via the normalized bar complex
//
// Normalized cochains vanish whenever an argument is the identity, so
// C^1 = F_2^{G'} and C^2 = F_2^{G' x G'} with G' = G \ {e}.

namespace {

struct BarCoordinates {
  const FiniteGroup& group;
  std::vector<GroupIndex> nonidentity;
  std::vector<std::ptrdiff_t> position;  // group index -> slot in nonidentity, -1 for e

  explicit BarCoordinates(const FiniteGroup& g) : group(g), position(g.size(), -1) {
    for (GroupIndex a = 0; a < g.size(); ++a) {
      if (a == g.identity()) continue;
      position[a] = static_cast<std::ptrdiff_t>(nonidentity.size());
      nonidentity.push_back(a);
    }
  }
  std::size_t m() const { return nonidentity.size(); }
  std::size_t c2_dim() const { return m() * m(); }

  // coordinate of (a, b) in C^2, or -1 if either is e
  std::ptrdiff_t pair(GroupIndex a, GroupIndex b) const {
    if (position[a] < 0 || position[b] < 0) return -1;
    return position[a] * static_cast<std::ptrdiff_t>(m()) + position[b];
  }

  BitVector encode(const TwoCocycle& mu) const {
    BitVector v(bit_words(c2_dim()), 0);
    for (GroupIndex a : nonidentity)
      for (GroupIndex b : nonidentity)
        if (mu(a, b)) set_bit(v, static_cast<std::size_t>(pair(a, b)), true);
    return v;
  }

  TwoCocycle decode(const BitVector& v) const {
    TwoCocycle mu(group);
    for (GroupIndex a : nonidentity)
      for (GroupIndex b : nonidentity)
        if (get_bit(v, static_cast<std::size_t>(pair(a, b)))) mu.set(a, b, 1);
    return mu;
  }

  // delta_1 of the indicator cochain of element g, as a C^2 vector
  BitVector delta1_column(GroupIndex g) const {
    OneCochain nu(group.size(), 0);
    nu[g] = 1;
    return encode(coboundary(group, nu));
  }
};

void toggle(BitVector& row, std::ptrdiff_t coord) {
  if (coord >= 0) flip_bit(row, static_cast<std::size_t>(coord));
}

}  // namespace

CohomologyClassSet classify_h2(const FiniteGroup& group) {
  if (group.size() > 64) throw UnsupportedError("classify_h2 supports |G| <= 64");
  BarCoordinates coords(group);
  const std::size_t dim = coords.c2_dim();

  // Z^2 = ker delta_2. Each triple contributes the row
  // mu(h,k) + mu(gh,k) + mu(g,hk) + mu(g,h).
  F2Echelon relations(dim);
  for (GroupIndex g : coords.nonidentity) {
    for (GroupIndex h : coords.nonidentity) {
      for (GroupIndex k : coords.nonidentity) {
        BitVector row(bit_words(dim), 0);
        toggle(row, coords.pair(h, k));
        toggle(row, coords.pair(group.mul(g, h), k));
        toggle(row, coords.pair(g, group.mul(h, k)));
        toggle(row, coords.pair(g, h));
        if (!is_zero(row)) relations.insert(std::move(row));
      }
    }
  }
  const std::vector<BitVector> cocycles = relations.nullspace();

  // B^2 = im delta_1
  F2Echelon span(dim);
  std::size_t coboundary_rank = 0;
  for (GroupIndex g : coords.nonidentity) {
    if (span.insert(coords.delta1_column(g))) ++coboundary_rank;
  }

  CohomologyClassSet result{group, 0, cocycles.size(), coboundary_rank, {}};
  for (const auto& z : cocycles) {
    if (span.insert(z)) result.basis.push_back(coords.decode(z));
  }
  result.dimension = result.basis.size();
  return result;
}

std::vector<TwoCocycle> CohomologyClassSet::representatives() const {
  if (dimension > 16) throw UnsupportedError("too many cohomology classes to enumerate");
  std::vector<TwoCocycle> reps;
  reps.reserve(std::size_t{1} << dimension);
  for (std::size_t mask = 0; mask < (std::size_t{1} << dimension); ++mask) {
    TwoCocycle mu(group);
    for (std::size_t i = 0; i < dimension; ++i)
      if (mask >> i & 1u) mu = mu + basis[i];
    reps.push_back(std::move(mu));
  }
  return reps;
}

std::size_t class_index(const CohomologyClassSet& classes, const TwoCocycle& mu) {
  if (!(mu.group() == classes.group)) throw StructuralError("cocycle lives on another group");
  if (!validate_cocycle(mu)) throw StructuralError("class_index needs a valid normalized cocycle");
  BarCoordinates coords(classes.group);
  const std::size_t dim = coords.c2_dim();
  // columns: basis elements first, then coboundary generators
  std::vector<BitVector> columns;
  for (const auto& b : classes.basis) columns.push_back(coords.encode(b));
  for (GroupIndex g : coords.nonidentity) columns.push_back(coords.delta1_column(g));
  const auto combo = f2_solve(columns, coords.encode(mu), dim);
  if (!combo) throw ValidationError("cocycle not in the span of the classification basis");
  std::size_t index = 0;
  for (std::size_t i = 0; i < classes.dimension; ++i)
    if (get_bit(*combo, i)) index |= std::size_t{1} << i;
  return index;
}

std::optional<OneCochain> are_cohomologous(const TwoCocycle& mu1, const TwoCocycle& mu2) {
  if (!(mu1.group() == mu2.group())) throw StructuralError("cocycles live on different groups");
  for (const auto* mu : {&mu1, &mu2}) {
    if (auto why = describe_cocycle_failure(*mu)) {
      throw StructuralError("are_cohomologous needs valid cocycles: " + *why);
    }
  }
  const auto& group = mu1.group();
  BarCoordinates coords(group);
  std::vector<BitVector> columns;
  for (GroupIndex g : coords.nonidentity) columns.push_back(coords.delta1_column(g));
  const auto combo = f2_solve(columns, coords.encode(mu1 + mu2), coords.c2_dim());
  if (!combo) return std::nullopt;
  OneCochain nu(group.size(), 0);
  for (std::size_t i = 0; i < coords.m(); ++i) nu[coords.nonidentity[i]] = get_bit(*combo, i);
  return nu;
}

}  // namespace pinless
