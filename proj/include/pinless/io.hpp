#pragma once

// JSON forms of complex specs, filtered modules and homology profiles.
// Malformed input raises ParseError.

#include <string_view>

#include <json.hpp>

#include "pinless/assemble.hpp"
#include "pinless/dg.hpp"
#include "pinless/homology.hpp"

namespace pinless {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text);
Json read_json_file(const std::string& path);

ComplexSpec complex_spec_from_json(const Json& j);
Json to_json(const ComplexSpec& spec);

/// {field, algebra, module, levels[, chi]}. The algebra may be given densely
/// or as {"builtin": "ring" | "groupoid" | "clifford" | "small_odd", ...};
/// the module may be "free".
struct FilteredModuleFile {
  FilteredModuleData data;
  std::optional<std::vector<FieldElement>> chi;
};
FilteredModuleFile filtered_module_from_json(const Json& j);
Json to_json(const FilteredModuleData& m);

Json to_json(const HomologyProfile& p);
HomologyProfile profile_from_json(const Json& j);

}  // namespace pinless
