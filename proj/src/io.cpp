#include "pinless/io.hpp"

#include <fstream>
#include <sstream>

#include "pinless/error.hpp"

namespace pinless {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

std::string element_ref(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  throw ParseError("group element must be a label or an index");
}

IntMatrix int_matrix(const Json& j) { return j.get<IntMatrix>(); }

DgAlgebra algebra_from_json(const Json& j) {
  if (j.contains("builtin")) {
    const auto kind = j.at("builtin").get<std::string>();
    if (kind == "ring") {
      const auto g = FiniteGroup::parse(j.at("group").get<std::string>());
      return algebra_from_ring(TwistedRing(TwoCocycle::parse(g, j.value("mu", std::string("[]")))));
    }
    if (kind == "groupoid") {
      const auto g0 = FiniteGroup::parse(j.at("group0").get<std::string>());
      const auto g1 = FiniteGroup::parse(j.at("group1").get<std::string>());
      return algebra_from_groupoid(TwistedGroupoid(TwoCocycle::parse(g0, j.value("mu0", std::string("[]"))),
                                                   TwoCocycle::parse(g1, j.value("mu1", std::string("[]")))));
    }
    if (kind == "clifford") {
      return algebra_from_clifford(j.at("n").get<unsigned>(), parse_clifford_sign(j.at("sign").get<std::string>()));
    }
    if (kind == "small_odd") return small_odd_algebra(j.at("c").get<std::int64_t>(), j.at("a").get<std::int64_t>());
    throw ParseError("unknown builtin algebra '" + kind + "'");
  }
  DgAlgebra a;
  a.grading.modulus = j.value("grading", 2);
  a.labels = j.value("labels", std::vector<std::string>{});
  a.degrees = j.at("degrees").get<std::vector<int>>();
  a.mult = j.at("mult").get<std::vector<std::vector<std::vector<std::int64_t>>>>();
  a.d = j.contains("d") ? int_matrix(j.at("d")) : IntMatrix(a.dim(), std::vector<std::int64_t>(a.dim(), 0));
  a.unit = j.value("unit", std::size_t{0});
  return a;
}

Json algebra_to_json(const DgAlgebra& a) {
  return Json{{"grading", a.grading.modulus}, {"labels", a.labels}, {"degrees", a.degrees},
              {"mult", a.mult}, {"d", a.d}, {"unit", a.unit}};
}

}  // namespace

Json parse_json(std::string_view text) {
  return guarded("invalid JSON", [&] { return Json::parse(text); });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

ComplexSpec complex_spec_from_json(const Json& j) {
  return guarded("complex file", [&] {
    ComplexSpec s;
    for (const auto& g : j.at("generators")) {
      ComplexGenerator gen{g.at("label").get<std::string>(), std::nullopt, std::nullopt};
      if (g.contains("grading")) gen.grading = g.at("grading").get<int>();
      if (g.contains("filtration")) gen.filtration = g.at("filtration").get<double>();
      s.generators.push_back(std::move(gen));
    }
    for (const auto& e : j.value("entries", Json::array())) {
      ComplexEntry entry{e.at("from").get<std::string>(), e.at("to").get<std::string>(), {},
                         e.value("provenance", std::string())};
      for (const auto& t : e.at("terms")) {
        entry.terms.push_back({element_ref(t.value("g0", Json("e"))), element_ref(t.value("g1", Json("e"))),
                               t.value("sign", std::int64_t{1})});
      }
      s.entries.push_back(std::move(entry));
    }
    if (j.contains("groups")) {
      s.group0 = j["groups"].value("g0", s.group0);
      s.group1 = j["groups"].value("g1", s.group1);
    }
    if (j.contains("cocycles")) {
      s.mu0 = j["cocycles"].value("mu0", s.mu0);
      s.mu1 = j["cocycles"].value("mu1", s.mu1);
    }
    if (j.contains("convention")) s.convention = parse_delta(j.at("convention").get<std::string>());
    return s;
  });
}

Json to_json(const ComplexSpec& spec) {
  Json gens = Json::array();
  for (const auto& g : spec.generators) {
    Json x{{"label", g.label}};
    if (g.grading) x["grading"] = *g.grading;
    if (g.filtration) x["filtration"] = *g.filtration;
    gens.push_back(std::move(x));
  }
  Json entries = Json::array();
  for (const auto& e : spec.entries) {
    Json terms = Json::array();
    for (const auto& t : e.terms) terms.push_back({{"g0", t.g0}, {"g1", t.g1}, {"sign", t.sign}});
    Json x{{"from", e.from}, {"to", e.to}, {"terms", std::move(terms)}};
    if (!e.provenance.empty()) x["provenance"] = e.provenance;
    entries.push_back(std::move(x));
  }
  Json out{{"generators", std::move(gens)},
           {"entries", std::move(entries)},
           {"groups", {{"g0", spec.group0}, {"g1", spec.group1}}},
           {"cocycles", {{"mu0", spec.mu0}, {"mu1", spec.mu1}}}};
  if (spec.convention) out["convention"] = to_string(*spec.convention);
  return out;
}

FilteredModuleFile filtered_module_from_json(const Json& j) {
  return guarded("filtered module file", [&] {
    const Field k = Field::parse(j.at("field").get<std::string>());
    DgAlgebra a = algebra_from_json(j.at("algebra"));
    if (j.at("algebra").contains("grading")) a.grading.modulus = j.at("algebra").at("grading").get<int>();
    validate_algebra(a);
    DgModule m;
    const auto& mj = j.at("module");
    if (mj.is_string()) {
      if (mj.get<std::string>() != "free") throw ParseError("module must be \"free\" or an object");
      m = free_module(a);
    } else {
      m.grading = a.grading;
      m.degrees = mj.at("degrees").get<std::vector<int>>();
      m.d = int_matrix(mj.at("d"));
      m.action = mj.at("action").get<std::vector<IntMatrix>>();
    }
    std::vector<FiltrationLevel> levels;
    for (const auto& l : j.at("levels")) {
      FiltrationLevel level{l.at("value").get<double>(), l.at("basis").get<std::vector<std::size_t>>(), {}};
      for (const auto& c : l.value("certificates", Json::array())) {
        level.certificates.push_back({c.at("generator").get<std::vector<std::int64_t>>(), c.value("shift", 0)});
      }
      levels.push_back(std::move(level));
    }
    FilteredModuleFile out{{std::move(a), std::move(m), std::move(levels), k}, std::nullopt};
    if (j.contains("chi")) {
      std::vector<FieldElement> chi;
      for (const auto& x : j.at("chi"))
        chi.push_back(x.is_string() ? k.parse_element(x.get<std::string>()) : k.from_int(x.get<std::int64_t>()));
      out.chi = std::move(chi);
    }
    return out;
  });
}

Json to_json(const FilteredModuleData& m) {
  Json levels = Json::array();
  for (const auto& l : m.levels) {
    Json certs = Json::array();
    for (const auto& c : l.certificates) certs.push_back({{"generator", c.generator}, {"shift", c.shift}});
    levels.push_back({{"value", l.value}, {"basis", l.basis}, {"certificates", std::move(certs)}});
  }
  return Json{{"field", m.field.spec()},
              {"algebra", algebra_to_json(m.algebra)},
              {"module", {{"degrees", m.module.degrees}, {"d", m.module.d}, {"action", m.module.action}}},
              {"levels", std::move(levels)}};
}

Json to_json(const HomologyProfile& p) {
  Json out{{"integral", p.integral}, {"ranks", p.ranks}, {"total", p.total()}};
  if (p.integral) {
    Json tors = Json::array();
    for (const auto& t : p.torsion) {
      Json row = Json::array();
      for (const auto& d : t) row.push_back(d.str());
      tors.push_back(std::move(row));
    }
    out["torsion"] = std::move(tors);
  }
  return out;
}

HomologyProfile profile_from_json(const Json& j) {
  return guarded("homology profile", [&] {
    HomologyProfile p{j.at("integral").get<bool>(), j.at("ranks").get<std::vector<std::size_t>>(), {}};
    if (p.integral) {
      for (const auto& row : j.at("torsion")) {
        std::vector<BigInt> t;
        for (const auto& d : row) t.emplace_back(d.get<std::string>());
        p.torsion.push_back(std::move(t));
      }
    }
    return p;
  });
}

}  // namespace pinless
