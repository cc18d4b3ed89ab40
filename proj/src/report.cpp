#include "pinless/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "pinless/error.hpp"
#include "text.hpp"

namespace pinless {

namespace {

std::size_t max_twisted_total(const EquivariantCellComplex& c, const Field& k, DeltaConvention convention,
                              std::vector<SystemRow>* rows) {
  std::size_t best = 0;
  for (const auto& eps : enumerate_augmentations(TwistedRing(c.mu), k)) {
    const auto p = homology_dims(specialize(c, delta_monodromy(eps, convention)));
    best = std::max(best, p.total());
    if (rows) rows->push_back({eps.to_string(), p.ranks, p.total()});
  }
  return best;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

}  // namespace

BoundReport compute_bound(std::string_view space, const Field& k, DeltaConvention convention) {
  const auto c = build(space);
  BoundReport r;
  r.space = std::string(text::trim(space));
  r.field = k.spec();
  r.convention = convention;
  try {
    r.omega_w2 = torsion_lift_test(c) ? "holds" : "not established";
  } catch (const ValidationError& e) {
    r.omega_w2 = "unknown";
    r.incomplete = true;
    r.notes.push_back(e.what());
  }
  if (twist_trivializes(k)) r.notes.push_back("characteristic 2: the twist is invisible");
  for (const auto& n : c.notes) r.notes.push_back(n);

  r.new_bound = max_twisted_total(c, k, convention, &r.systems);
  if (r.systems.empty()) {
    r.incomplete = true;
    r.notes.push_back("no augmentation of the twisted group ring into " + k.spec());
  }
  r.classical_bound = homology_dims(specialize_trivial(c, Field::prime(2))).total();
  if (r.systems.empty()) {
    r.verdict = "no twisted bound";
  } else if (r.new_bound > r.classical_bound) {
    r.verdict = "new bound is stronger";
  } else if (r.new_bound == r.classical_bound) {
    r.verdict = "bounds agree";
  } else {
    r.verdict = "classical bound is stronger";
  }

  const auto call = text::parse_call(space);
  if (call.name == "product" && call.args.size() == 2) {
    const auto a = build(call.args[0]);
    const auto b = build(call.args[1]);
    if (b.mu.is_zero()) {
      KunnethFactor f{std::string(text::trim(call.args[0])), std::string(text::trim(call.args[1])), 0, 0, 0};
      f.left_max = max_twisted_total(a, k, convention, nullptr);
      f.right_total = homology_dims(specialize_trivial(b, k)).total();
      f.product = f.left_max * f.right_total;
      if (f.product != r.new_bound) {
        r.notes.push_back("Kunneth factor " + std::to_string(f.product) + " differs from the direct bound " +
                          std::to_string(r.new_bound));
      }
      r.kunneth = f;
    }
  }
  return r;
}

Json to_json(const BoundReport& r) {
  Json systems = Json::array();
  for (const auto& s : r.systems) {
    systems.push_back({{"augmentation", s.augmentation}, {"dims", s.dims}, {"total", s.total}});
  }
  Json out{{"space", r.space},
           {"field", r.field},
           {"convention", to_string(r.convention)},
           {"omega_w2", r.omega_w2},
           {"systems", std::move(systems)},
           {"new_bound", r.new_bound},
           {"classical_bound", r.classical_bound},
           {"verdict", r.verdict},
           {"notes", r.notes},
           {"incomplete", r.incomplete}};
  if (r.kunneth) {
    out["kunneth"] = {{"left", r.kunneth->left},           {"right", r.kunneth->right},
                      {"left_max", r.kunneth->left_max},   {"right_total", r.kunneth->right_total},
                      {"product", r.kunneth->product}};
  }
  return out;
}

BoundReport bound_report_from_json(const Json& j) {
  try {
    BoundReport r;
    r.space = j.at("space").get<std::string>();
    r.field = j.at("field").get<std::string>();
    r.convention = parse_delta(j.at("convention").get<std::string>());
    r.omega_w2 = j.at("omega_w2").get<std::string>();
    for (const auto& s : j.at("systems")) {
      r.systems.push_back({s.at("augmentation").get<std::string>(), s.at("dims").get<std::vector<std::size_t>>(),
                           s.at("total").get<std::size_t>()});
    }
    r.new_bound = j.at("new_bound").get<std::size_t>();
    r.classical_bound = j.at("classical_bound").get<std::size_t>();
    r.verdict = j.at("verdict").get<std::string>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    r.incomplete = j.at("incomplete").get<bool>();
    if (j.contains("kunneth")) {
      const auto& f = j["kunneth"];
      r.kunneth = KunnethFactor{f.at("left").get<std::string>(), f.at("right").get<std::string>(),
                                f.at("left_max").get<std::size_t>(), f.at("right_total").get<std::size_t>(),
                                f.at("product").get<std::size_t>()};
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bound report: ") + e.what());
  }
}

std::string to_table(const BoundReport& r) {
  std::ostringstream out;
  out << "space            " << r.space << "\n"
      << "field            " << r.field << "\n"
      << "delta            " << to_string(r.convention) << "\n"
      << "Omega w2         " << r.omega_w2 << "\n\n";
  out << std::left << std::setw(20) << "dims" << std::setw(8) << "total" << "augmentation\n";
  for (const auto& s : r.systems) out << std::setw(20) << join(s.dims) << std::setw(8) << s.total << s.augmentation << "\n";
  out << "\nnew bound        " << r.new_bound << "\n"
      << "classical bound  " << r.classical_bound << "\n"
      << "verdict          " << r.verdict << "\n";
  if (r.kunneth) {
    out << "kunneth          " << r.kunneth->left_max << " x " << r.kunneth->right_total << " = "
        << r.kunneth->product << "\n";
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

std::string growth_space(std::size_t p, std::size_t r) {
  return "product(rp(2),connsum_power(lens(" + std::to_string(p) + ",3)," + std::to_string(r) + "))";
}

GrowthTable report_growth(std::size_t p, std::size_t r_min, std::size_t r_max, const Field& k,
                          DeltaConvention convention) {
  if (r_min == 0 || r_min > r_max) throw ParseError("growth needs 1 <= r_min <= r_max");
  GrowthTable t{p, k.spec(), convention, {}, true, true, std::nullopt};
  for (std::size_t r = r_min; r <= r_max; ++r) {
    const auto c = build(growth_space(p, r));
    GrowthRow row{r, homology_dims(specialize_trivial(c, Field::prime(2))).total(),
                  max_twisted_total(c, k, convention, nullptr)};
    if (!t.rows.empty()) {
      t.strictly_increasing = t.strictly_increasing && row.new_bound > t.rows.back().new_bound;
      t.classical_constant = t.classical_constant && row.classical == t.rows.back().classical;
    }
    if (!t.first_exceeding && row.new_bound > row.classical) t.first_exceeding = r;
    t.rows.push_back(row);
  }
  return t;
}

Json to_json(const GrowthTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) rows.push_back({{"r", r.r}, {"classical", r.classical}, {"new", r.new_bound}});
  Json out{{"p", t.p},
           {"field", t.field},
           {"convention", to_string(t.convention)},
           {"rows", std::move(rows)},
           {"strictly_increasing", t.strictly_increasing},
           {"classical_constant", t.classical_constant}};
  out["first_exceeding"] = t.first_exceeding ? Json(*t.first_exceeding) : Json(nullptr);
  return out;
}

GrowthTable growth_table_from_json(const Json& j) {
  try {
    GrowthTable t;
    t.p = j.at("p").get<std::size_t>();
    t.field = j.at("field").get<std::string>();
    t.convention = parse_delta(j.at("convention").get<std::string>());
    for (const auto& r : j.at("rows"))
      t.rows.push_back({r.at("r").get<std::size_t>(), r.at("classical").get<std::size_t>(), r.at("new").get<std::size_t>()});
    t.strictly_increasing = j.at("strictly_increasing").get<bool>();
    t.classical_constant = j.at("classical_constant").get<bool>();
    if (!j.at("first_exceeding").is_null()) t.first_exceeding = j["first_exceeding"].get<std::size_t>();
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("growth table: ") + e.what());
  }
}

std::string to_table(const GrowthTable& t) {
  std::ostringstream out;
  out << "family  product(rp(2),connsum_power(lens(" << t.p << ",3),r))\n"
      << "field   " << t.field << "  delta " << to_string(t.convention) << "\n\n";
  out << std::left << std::setw(6) << "r" << std::setw(12) << "classical" << "new\n";
  for (const auto& r : t.rows) out << std::setw(6) << r.r << std::setw(12) << r.classical << r.new_bound << "\n";
  out << "\nstrictly increasing  " << (t.strictly_increasing ? "yes" : "no") << "\n"
      << "classical constant   " << (t.classical_constant ? "yes" : "no") << "\n"
      << "first r with new > classical  " << (t.first_exceeding ? std::to_string(*t.first_exceeding) : "none")
      << "\n";
  return out.str();
}

}  // namespace pinless
