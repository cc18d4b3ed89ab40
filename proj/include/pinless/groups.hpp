#pragma once

// Finite groups given by multiplication tables, Z/2-valued group 2-cocycles,
// and H^2(G; Z/2) through the normalized inhomogeneous bar resolution.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pinless {

using GroupIndex = std::size_t;

class FiniteGroup {
 public:
  /// Builds a group from an explicit table; table[a][b] is the index of a*b.
  /// Throws StructuralError if the table is not total, not associative, or
  /// lacks an identity or inverses.
  static FiniteGroup from_table(std::vector<std::string> labels,
                                std::vector<std::vector<GroupIndex>> table,
                                std::string spec = "table");
  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup trivial() { return cyclic(1); }
  /// Elements are pairs (a, b), indexed a * |H| + b.
  static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
  /// Grammar: z(n) | prod(spec, spec) | trivial
  static FiniteGroup parse(std::string_view spec);

  std::size_t size() const { return impl_->labels.size(); }
  GroupIndex identity() const { return impl_->identity; }
  GroupIndex mul(GroupIndex a, GroupIndex b) const { return impl_->table[a * size() + b]; }
  GroupIndex inverse(GroupIndex a) const { return impl_->inverse[a]; }
  const std::string& label(GroupIndex a) const { return impl_->labels[a]; }
  const std::string& spec() const { return impl_->spec; }
  std::size_t order_of(GroupIndex a) const;
  bool is_abelian() const;

  /// Factor sizes when built by direct_product; empty otherwise.
  const std::vector<std::size_t>& factor_sizes() const { return impl_->factors; }

  /// Resolves an element reference: a label, a decimal index, `e`, or for
  /// cyclic groups `t`, `x`, `t^k`, `x^k` (powers of the generator 1).
  GroupIndex element(std::string_view ref) const;

  /// Greedy generating set: repeatedly adds the smallest element outside the
  /// subgroup generated so far.
  std::vector<GroupIndex> generators() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.impl_ == b.impl_ ||
           (a.impl_->table == b.impl_->table && a.impl_->labels == b.impl_->labels);
  }

 private:
  struct Impl {
    std::vector<std::string> labels;
    std::vector<GroupIndex> table;
    std::vector<GroupIndex> inverse;
    GroupIndex identity = 0;
    std::string spec;
    bool cyclic = false;
    std::vector<std::size_t> factors;
  };
  explicit FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

/// A Z/2-valued function on G x G. Construction only checks shape; use
/// validate_cocycle for the cocycle identity and normalization.
class TwoCocycle {
 public:
  /// The zero cocycle.
  explicit TwoCocycle(FiniteGroup group);
  /// values[a][b] in {0, 1}; StructuralError on wrong shape or other values.
  TwoCocycle(FiniteGroup group, const std::vector<std::vector<int>>& values);
  /// Cocycle equal to 1 exactly on the listed pairs.
  static TwoCocycle from_pairs(FiniteGroup group,
                               const std::vector<std::pair<GroupIndex, GroupIndex>>& ones);
  /// Parses a literal such as "(x,x)" or "(1,1),(1,2)"; "0" or "" is the zero cocycle.
  static TwoCocycle parse(FiniteGroup group, std::string_view literal);

  const FiniteGroup& group() const { return group_; }
  int operator()(GroupIndex a, GroupIndex b) const { return bits_[a * group_.size() + b]; }
  void set(GroupIndex a, GroupIndex b, int v) { bits_[a * group_.size() + b] = v & 1; }
  bool is_zero() const;
  /// Pairs where the cocycle is 1, in row-major order.
  std::vector<std::pair<GroupIndex, GroupIndex>> support() const;
  std::string to_string() const;

  TwoCocycle operator+(const TwoCocycle& other) const;

  friend bool operator==(const TwoCocycle& a, const TwoCocycle& b) {
    return a.group_ == b.group_ && a.bits_ == b.bits_;
  }

 private:
  FiniteGroup group_;
  std::vector<std::uint8_t> bits_;
};

/// A 1-cochain nu: G -> Z/2 with nu(e) = 0.
using OneCochain = std::vector<std::uint8_t>;

/// delta nu (g, h) = nu(g) + nu(h) + nu(gh)
TwoCocycle coboundary(const FiniteGroup& group, const OneCochain& nu);

bool is_normalized(const TwoCocycle& mu);

/// True iff mu satisfies the cocycle identity on all triples and is normalized.
bool validate_cocycle(const TwoCocycle& mu);

/// First violation, for error messages; nullopt when valid.
std::optional<std::string> describe_cocycle_failure(const TwoCocycle& mu);

struct CohomologyClassSet {
  FiniteGroup group;
  std::size_t dimension = 0;     // dim over F_2 of H^2(G; Z/2)
  std::size_t cocycle_rank = 0;  // dim Z^2 (normalized)
  std::size_t coboundary_rank = 0;
  std::vector<TwoCocycle> basis;  // non-cohomologous cocycles spanning a complement of B^2

  /// All 2^dimension representatives, the i-th being the sum of basis
  /// elements at the set bits of i. UnsupportedError when dimension > 16.
  std::vector<TwoCocycle> representatives() const;
};

/// H^2(G; Z/2) via normalized bar cochains and Gaussian elimination over F_2.
/// UnsupportedError if |G| > 64.
CohomologyClassSet classify_h2(const FiniteGroup& group);

/// Index (in representatives() numbering) of the class of mu.
std::size_t class_index(const CohomologyClassSet& classes, const TwoCocycle& mu);

/// Some nu with mu1 - mu2 = delta nu, or nullopt when not cohomologous.
/// StructuralError on mismatched groups or invalid inputs.
std::optional<OneCochain> are_cohomologous(const TwoCocycle& mu1, const TwoCocycle& mu2);

}  // namespace pinless
