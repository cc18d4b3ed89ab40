#pragma once

// The bound pipeline behind `pinless bound` and `pinless growth`.

#include <optional>
#include <string>
#include <vector>

#include "pinless/io.hpp"
#include "pinless/spaces.hpp"
#include "pinless/twisted.hpp"

namespace pinless {

struct SystemRow {
  std::string augmentation;
  std::vector<std::size_t> dims;
  std::size_t total = 0;
  friend bool operator==(const SystemRow&, const SystemRow&) = default;
};

/// For product(a, b) with b of trivial twist: max_eps dim H(a; k_eps) times
/// dim H(b; k).
struct KunnethFactor {
  std::string left, right;
  std::size_t left_max = 0;
  std::size_t right_total = 0;
  std::size_t product = 0;
  friend bool operator==(const KunnethFactor&, const KunnethFactor&) = default;
};

struct BoundReport {
  std::string space;
  std::string field;
  DeltaConvention convention = DeltaConvention::Double;
  std::string omega_w2;  // "holds", "not established" or "unknown"
  std::vector<SystemRow> systems;
  std::size_t new_bound = 0;
  std::size_t classical_bound = 0;
  std::string verdict;
  std::optional<KunnethFactor> kunneth;
  std::vector<std::string> notes;
  bool incomplete = false;
  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

BoundReport compute_bound(std::string_view space, const Field& k, DeltaConvention convention);
Json to_json(const BoundReport& r);
BoundReport bound_report_from_json(const Json& j);
std::string to_table(const BoundReport& r);

struct GrowthRow {
  std::size_t r = 0;
  std::size_t classical = 0;
  std::size_t new_bound = 0;
  friend bool operator==(const GrowthRow&, const GrowthRow&) = default;
};

struct GrowthTable {
  std::size_t p = 0;
  std::string field;
  DeltaConvention convention = DeltaConvention::Double;
  std::vector<GrowthRow> rows;
  bool strictly_increasing = false;
  bool classical_constant = false;
  std::optional<std::size_t> first_exceeding;  // least r with new > classical
  friend bool operator==(const GrowthTable&, const GrowthTable&) = default;
};

/// product(rp(2), connsum_power(lens(p,3), r)) for r in [r_min, r_max].
std::string growth_space(std::size_t p, std::size_t r);
GrowthTable report_growth(std::size_t p, std::size_t r_min, std::size_t r_max, const Field& k,
                          DeltaConvention convention);
Json to_json(const GrowthTable& t);
GrowthTable growth_table_from_json(const Json& j);
std::string to_table(const GrowthTable& t);

}  // namespace pinless
