// pinless: bounds on Lagrangian intersections from twisted local systems.

#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "pinless/assemble.hpp"
#include "pinless/clifford.hpp"
#include "pinless/error.hpp"
#include "pinless/groups.hpp"
#include "pinless/homology.hpp"
#include "pinless/io.hpp"
#include "pinless/report.hpp"
#include "pinless/spaces.hpp"
#include "pinless/twisted.hpp"

using namespace pinless;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kIncomplete = 2;

struct Globals {
  bool json = false;
  std::string delta = "double";
};

void emit(const Globals& g, const Json& j, const std::string& table) {
  if (g.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << table;
  }
}

std::vector<std::string> text_split(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string dims(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

int run_bound(const Globals& g, const std::string& space, const std::string& field) {
  const auto r = compute_bound(space, Field::parse(field), parse_delta(g.delta));
  emit(g, to_json(r), to_table(r));
  return r.incomplete ? kIncomplete : kOk;
}

int run_growth(const Globals& g, std::size_t p, std::size_t r_min, std::size_t r_max, std::string field) {
  if (field.empty()) field = "gf(" + std::to_string(p) + ")";
  const auto t = report_growth(p, r_min, r_max, Field::parse(field), parse_delta(g.delta));
  emit(g, to_json(t), to_table(t));
  return t.strictly_increasing && t.classical_constant ? kOk : kError;
}

int run_ring(const Globals& g, const std::string& group, const std::string& cocycle,
             const std::vector<std::string>& fields) {
  const auto grp = FiniteGroup::parse(group);
  const TwistedRing ring(TwoCocycle::parse(grp, cocycle));
  Json j{{"group", grp.spec()}, {"cocycle", ring.cocycle().to_string()}};
  std::ostringstream t;
  t << "ring     Z[" << grp.spec() << "]^tw, mu = " << ring.cocycle().to_string() << "\n";
  if (grp.size() == 2) {
    const auto iso = check_gaussian_isomorphism(ring);
    Json w = Json::array();
    for (const auto& [re, im] : iso.witness) w.push_back({re, im});
    j["gaussian"] = {{"isomorphic", iso.isomorphic}, {"witness", w}, {"reason", iso.reason}};
    t << "Z[i]     " << (iso.isomorphic ? "isomorphic" : "not isomorphic: " + iso.reason) << "\n";
  }
  Json augs = Json::object();
  for (const auto& f : fields) {
    const auto k = Field::parse(f);
    Json list = Json::array();
    t << "augmentations into " << k.spec() << ":";
    const auto found = enumerate_augmentations(ring, k);
    for (const auto& eps : found) {
      list.push_back(eps.to_string());
      t << " [" << eps.to_string() << "]";
    }
    t << (found.empty() ? " none\n" : "\n");
    augs[k.spec()] = std::move(list);
  }
  j["augmentations"] = std::move(augs);
  emit(g, j, t.str());
  return kOk;
}

int run_cocycle_classify(const Globals& g, const std::string& group) {
  const auto grp = FiniteGroup::parse(group);
  const auto cls = classify_h2(grp);
  Json basis = Json::array();
  std::ostringstream t;
  t << "H^2(" << grp.spec() << "; Z/2) has dimension " << cls.dimension << "\n"
    << "cocycles " << cls.cocycle_rank << ", coboundaries " << cls.coboundary_rank << "\n";
  for (const auto& mu : cls.basis) {
    basis.push_back(mu.to_string());
    t << "  " << mu.to_string() << "\n";
  }
  emit(g,
       {{"group", grp.spec()},
        {"dimension", cls.dimension},
        {"cocycle_rank", cls.cocycle_rank},
        {"coboundary_rank", cls.coboundary_rank},
        {"basis", basis}},
       t.str());
  return kOk;
}

int run_homology(const Globals& g, const std::string& space, const std::string& field,
                 const std::string& monodromy) {
  const auto c = build(space);
  HomologyProfile p;
  if (field == "z" || field == "Z") {
    if (!monodromy.empty()) throw ParseError("--monodromy needs a field");
    p = integral_homology(trivialize(c));
  } else {
    const auto k = Field::parse(field);
    if (monodromy.empty()) {
      p = homology_dims(specialize_trivial(c, k));
    } else {
      std::map<GroupIndex, FieldElement> values;
      for (auto item : text_split(monodromy)) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("monodromy items look like g=v");
        values[c.group.element(item.substr(0, eq))] = k.parse_element(item.substr(eq + 1));
      }
      p = homology_dims(specialize(c, LocalSystem::from_values(c.group, k, values)));
    }
  }
  Json j = to_json(p);
  j["space"] = space;
  j["field"] = field;
  emit(g, j, space + " over " + field + ": " + p.to_string() + "  total " + std::to_string(p.total()) + "\n");
  return kOk;
}

int run_floer_assemble(const Globals& g, const std::string& path, const std::string& field, bool size) {
  const auto spec = complex_spec_from_json(read_json_file(path));
  const auto c = assemble(spec);
  Json j{{"generators", c.size()}, {"graded", c.graded}, {"d_squared", "ok"},
         {"groups", {{"g0", spec.group0}, {"g1", spec.group1}}}};
  std::ostringstream t;
  t << c.size() << " generators, d^2 = 0\n";
  int code = kOk;
  if (!field.empty()) {
    const auto k = Field::parse(field);
    const auto a0 = enumerate_augmentations(TwistedRing(c.groupoid.mu0()), k);
    const auto a1 = enumerate_augmentations(TwistedRing(c.groupoid.mu1()), k);
    Json specs = Json::array();
    const bool diagonal = spec.convention.has_value();
    for (std::size_t i = 0; i < a0.size(); ++i)
      for (std::size_t l = 0; l < a1.size(); ++l) {
        if (diagonal && i != l) continue;
        const auto s = specialize_augmented(c, a0[i], a1[l]);
        const auto p = specialized_homology(s);
        specs.push_back({{"eps0", a0[i].to_string()}, {"eps1", a1[l].to_string()}, {"profile", to_json(p)}});
        t << "eps0 [" << a0[i].to_string() << "] eps1 [" << a1[l].to_string() << "]: " << dims(p.ranks)
          << " total " << p.total() << "\n";
      }
    if (specs.empty()) {
      t << "no augmentations into " << k.spec() << "\n";
      code = kIncomplete;
    }
    j["field"] = k.spec();
    j["specializations"] = std::move(specs);
    if (size) {
      const auto view = filtered_view(c, k);
      const auto ext = extension_size(view);
      j["extension_size"] = ext.ok ? Json(ext.size) : Json(nullptr);
      t << "extension size " << (ext.ok ? std::to_string(ext.size) : "unavailable: " + ext.reason) << "\n";
      if (ext.ok && !a0.empty() && !a1.empty()) {
        const auto lb = size_lower_bound(view, augmentation_character(c.groupoid, a0[0], a1[0]));
        j["size_lower_bound"] = lb.bound;
        t << "size lower bound " << lb.bound << "\n";
      }
    }
  }
  emit(g, j, t.str());
  return code;
}

int run_floer_export(const std::string& space, const std::string& delta) {
  std::cout << to_json(complex_spec_from_cells(build(space), parse_delta(delta))).dump(2) << "\n";
  return kOk;
}

int run_dg_size(const Globals& g, const std::string& path) {
  const auto file = filtered_module_from_json(read_json_file(path));
  const auto ext = extension_size(file.data);
  Json j{{"ok", ext.ok}, {"size", ext.size}, {"per_level", ext.per_level}};
  std::ostringstream t;
  if (!ext.ok) {
    j["failed_level"] = *ext.failed_level;
    j["reason"] = ext.reason;
    t << "not an iterated extension: " << ext.reason << "\n";
    emit(g, j, t.str());
    return kError;
  }
  t << "extension size " << ext.size << " " << dims(ext.per_level) << "\n";
  if (file.chi) {
    const auto lb = size_lower_bound(file.data, *file.chi);
    j["lower_bound"] = lb.bound;
    t << "lower bound " << lb.bound << "\n";
  }
  emit(g, j, t.str());
  return kOk;
}

int run_clifford_check(const Globals& g, unsigned n, const std::string& sign) {
  const auto sigma = parse_clifford_sign(sign);
  const auto pre = reflection_preimage_group(n, sigma);
  const bool two_to_one = verify_two_to_one(n, sigma);
  Json j{{"convention", to_string(sigma)},
         {"preimage_group", to_string(pre.type)},
         {"two_to_one_verified", two_to_one}};
  std::ostringstream t;
  t << "convention " << to_string(sigma) << ", n = " << n << "\n"
    << "preimage of a reflection group: " << to_string(pre.type) << "\n"
    << "Pin -> O(n) two-to-one: " << (two_to_one ? "verified" : "FAILED") << "\n";
  emit(g, j, t.str());
  return two_to_one ? kOk : kError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pinless: intersection bounds from twisted local systems"};
  app.set_config("--config", "", "TOML config file; command-line flags override it");
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--delta", g.delta, "diagonal convention: double or inverse")
      ->transform(CLI::IsMember({"double", "inverse"}, CLI::ignore_case));

  int code = kOk;
  std::function<int()> action;

  std::string space, field = "gf(5)";
  auto* bound = app.add_subcommand("bound", "intersection bounds for a space");
  bound->add_option("--space", space, "space spec")->required();
  bound->add_option("--field", field, "coefficient field gf(q)")->capture_default_str();
  bound->callback([&] { action = [&] { return run_bound(g, space, field); }; });

  std::size_t p = 5, r_min = 1, r_max = 5;
  std::string growth_field;
  auto* growth = app.add_subcommand("growth", "new vs classical bound for rp(2) x lens(p,3)^#r");
  growth->add_option("--p", p, "lens space order")->capture_default_str();
  growth->add_option("--r-min", r_min, "first r")->capture_default_str();
  growth->add_option("--r-max", r_max, "last r")->capture_default_str();
  growth->add_option("--field", growth_field, "field (default gf(p))");
  growth->callback([&] { action = [&] { return run_growth(g, p, r_min, r_max, growth_field); }; });

  std::string group = "z(2)", cocycle = "[(1,1)]";
  std::vector<std::string> ring_fields{"gf(5)"};
  auto* ring = app.add_subcommand("ring", "twisted group ring and its augmentations");
  ring->add_option("--group", group, "group spec")->capture_default_str();
  ring->add_option("--cocycle", cocycle, "cocycle literal")->capture_default_str();
  ring->add_option("--field", ring_fields, "fields to search")->capture_default_str();
  ring->callback([&] { action = [&] { return run_ring(g, group, cocycle, ring_fields); }; });

  std::string h2_group;
  auto* coc = app.add_subcommand("cocycle", "group cocycles");
  coc->require_subcommand(1);
  auto* classify = coc->add_subcommand("classify", "H^2(G; Z/2)");
  classify->add_option("--group", h2_group, "group spec")->required();
  classify->callback([&] { action = [&] { return run_cocycle_classify(g, h2_group); }; });

  std::string h_space, h_field = "gf(2)", monodromy;
  auto* hom = app.add_subcommand("homology", "homology with local coefficients");
  hom->add_option("--space", h_space, "space spec")->required();
  hom->add_option("--field", h_field, "gf(q) or z")->capture_default_str();
  hom->add_option("--monodromy", monodromy, "rank-1 monodromy g=v,...");
  hom->callback([&] { action = [&] { return run_homology(g, h_space, h_field, monodromy); }; });

  std::string floer_file, floer_field;
  bool floer_size = false;
  auto* floer = app.add_subcommand("floer", "complexes from generator data");
  floer->require_subcommand(1);
  auto* assemble_cmd = floer->add_subcommand("assemble", "assemble and specialize a complex file");
  assemble_cmd->add_option("file", floer_file, "complex JSON")->required()->check(CLI::ExistingFile);
  assemble_cmd->add_option("--field", floer_field, "specialize along augmentations into this field");
  assemble_cmd->add_flag("--size", floer_size, "report the iterated-extension size");
  assemble_cmd->callback([&] { action = [&] { return run_floer_assemble(g, floer_file, floer_field, floer_size); }; });

  std::string export_space;
  auto* export_cmd = floer->add_subcommand("export", "write the complex of a built-in space as JSON");
  export_cmd->add_option("--space", export_space, "space spec")->required();
  export_cmd->callback([&] { action = [&] { return run_floer_export(export_space, g.delta); }; });

  std::string dg_file;
  auto* dg = app.add_subcommand("dg", "dg-modules");
  dg->require_subcommand(1);
  auto* dg_size = dg->add_subcommand("size", "iterated-extension size of a filtered module file");
  dg_size->add_option("file", dg_file, "filtered module JSON")->required()->check(CLI::ExistingFile);
  dg_size->callback([&] { action = [&] { return run_dg_size(g, dg_file); }; });

  unsigned dim = 2;
  std::string sign = "+";
  auto* cl = app.add_subcommand("clifford", "Clifford algebras and Pin groups");
  cl->require_subcommand(1);
  auto* check = cl->add_subcommand("check", "Pin preimage of a reflection and the double cover");
  check->add_option("--dim", dim, "dimension n")->capture_default_str()->check(CLI::Range(1, 6));
  check->add_option("--sign", sign, "+ or -")->capture_default_str();
  check->callback([&] { action = [&] { return run_clifford_check(g, dim, sign); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }
  try {
    code = action ? action() : kError;
  } catch (const pinless::Error& e) {
    if (g.json) {
      std::cout << Json{{"error", e.what()}}.dump(2) << "\n";
    }
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return code;
}

