#include <CLI11.hpp>

#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "sdual/cli.hpp"
#include "sdual/dynkin.hpp"
#include "sdual/families.hpp"
#include "sdual/fixtures.hpp"
#include "sdual/invariants.hpp"
#include "sdual/series.hpp"
#include "sdual/sweep.hpp"
#include "sdual/tables.hpp"

namespace sdual {

namespace {

using nlohmann::json;

struct Globals {
  bool json_out = false;
  std::string fixtures;
  long long grid_bound = 60;
  unsigned jobs = 0;
};

class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text rendering of a JSON record: one "key: value" line per field.
void print_record(std::ostream& out, const json& j, const std::string& indent = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    if (v.is_object()) {
      out << indent << it.key() << ":\n";
      print_record(out, v, indent + "  ");
    } else if (v.is_string()) {
      out << indent << it.key() << ": " << v.get<std::string>() << "\n";
    } else {
      out << indent << it.key() << ": " << v.dump() << "\n";
    }
  }
}

void emit(std::ostream& out, const Globals& g, const json& j) {
  if (g.json_out)
    out << j.dump(2) << "\n";
  else
    print_record(out, j);
}

json weights_record(const WeightSystem& w) { return w.str(); }

json classify_cmd(const std::string& text) {
  auto f = parse_poly(text, xyz_vars());
  FamilyDescriptor fam = classify_shape(f);
  IntMatrix E;
  for (const auto& e : f.support()) E.push_back({e[0], e[1], e[2]});
  auto canonical = canonical_weights(E);
  auto [reduced, c] = reduce_weights(canonical);
  long long idx = grading_index(E);
  json j{{"polynomial", f.str()},
         {"family", fam.str()},
         {"type", type_name(fam.type)},
         {"params", fam.params},
         {"canonical_weights", weights_record(canonical)},
         {"reduced_weights", weights_record(reduced)},
         {"c_f", c},
         {"grading_index", idx},
         {"gorenstein", gorenstein_parameter(reduced)},
         {"listed", idx == 2}};
  if (idx == 2) j["virtual_tags"] = [&] {
    json tags = json::array();
    for (FamilyType t : {FamilyType::IIBs, FamilyType::IV1, FamilyType::IV2, FamilyType::IV2s, fam.type}) {
      FamilyDescriptor v{t, fam.params, ""};
      if (base_type(t) == fam.type && is_virtual(v)) tags.push_back(type_name(t));
    }
    return tags;
  }();
  return j;
}

json dualize_cmd(const FamilyDescriptor& fam) {
  validate(fam);
  auto dp = build_dual_pair(fam);
  json j{{"family", fam.str()},
         {"f", invertible_polynomial(fam).str()},
         {"F", build_special_F(fam).str()},
         {"pair", {{"f1", dp.f1.str()}, {"f2", dp.f2.str()}}},
         {"pair_weights", weights_record(dp.weights)},
         {"virtual", is_virtual(fam)}};
  if (!is_virtual(fam)) return j;
  auto rep = verify_strange_duality(fam);
  j["h"] = build_virtual(fam).str();
  j["dolgachev"] = {{"h", format_tuple(rep.dol_virtual, true)}, {"icis", format_tuple(rep.dol_icis, false)}};
  j["gabrielov"] = {{"h", format_tuple(rep.gab_virtual, false)}, {"icis", format_tuple(rep.gab_icis, true)}};
  j["in_regime"] = in_regime(fam);
  j["fallback"] = rep.fallback;
  j["duality_pass"] = rep.pass();
  return j;
}

json virtual_cmd(const FamilyDescriptor& fam) {
  validate(fam);
  if (!is_virtual(fam)) throw NotVirtual(fam.str() + " has no four-monomial virtual polynomial");
  auto [var, repl] = coordinate_change(fam);
  auto vs = virtual_split(fam);
  auto regime = regime_check(fam);
  json j{{"family", fam.str()},
         {"F", build_special_F(fam).str()},
         {"change", var + " -> " + repl.str()},
         {"h", build_virtual(fam).str()},
         {"h1", vs.h1.str()},
         {"h2", vs.h2.str()},
         {"w1", weights_record(vs.w1)},
         {"w2", weights_record(vs.w2)},
         {"in_regime", regime.ok}};
  if (!regime.ok) j["regime_note"] = regime.reason;
  return j;
}

json weights_cmd(const FamilyDescriptor& fam) {
  validate(fam);
  IntMatrix E = exponent_matrix(fam);
  auto canonical = canonical_weights(E);
  auto [reduced, c] = reduce_weights(canonical);
  auto group = symmetry_group(E);
  json j{{"family", fam.str()},
         {"exponent_matrix", E},
         {"det", det(E)},
         {"canonical_weights", weights_record(canonical)},
         {"reduced_weights", weights_record(reduced)},
         {"c_f", c},
         {"symmetry_group", group.invariant_factors},
         {"group_order", group.order()},
         {"grading_index", grading_index(E)},
         {"gorenstein", gorenstein_parameter(fam)},
         {"pair_weights", weights_record(build_dual_pair(fam).weights)}};
  if (is_virtual(fam)) {
    auto [w1, w2] = virtual_weight_systems(fam);
    j["h1_weights"] = weights_record(w1);
    j["h2_weights"] = weights_record(w2);
  }
  return j;
}

json poincare_cmd(const FamilyDescriptor& fam, int terms) {
  validate(fam);
  auto dp = build_dual_pair(fam);
  auto p = poincare_series(dp.weights);
  json j{{"family", fam.str()}, {"pair_weights", weights_record(dp.weights)}, {"poincare", p.str()}};
  j["series"] = p.series(terms);
  if (is_virtual(fam)) {
    auto dol = dolgachev_icis(fam);
    auto orbit = orbit_polynomial(dol);
    j["dolgachev_icis"] = format_tuple(dol, false);
    j["orbit"] = orbit.str();
    j["product"] = (p * orbit).str();
  }
  return j;
}

json zeta_cmd(const std::optional<FamilyDescriptor>& fam, const std::string& poly, bool unreduced) {
  if (!poly.empty()) {
    auto p = parse_poly(poly, xyz_vars());
    auto z = zeta_infinity(p, !unreduced);
    return {{"polynomial", p.str()}, {"zeta", z.str()}, {"degree", z.degree()}, {"reduced", !unreduced}};
  }
  validate(*fam);
  if (!is_virtual(*fam)) throw NotVirtual(fam->str() + " has no four-monomial virtual polynomial");
  auto rep = verify_zeta_identity(*fam);
  json j = rep.to_json();
  if (unreduced) j["zeta_unreduced"] = zeta_infinity(build_virtual(*fam), false).str();
  return j;
}

json enumerate_cmd(long long a, long long bound) {
  auto fams = enumerate_by_gorenstein(a, bound);
  json list = json::array();
  for (const auto& f : fams) {
    json e{{"family", f.str()}};
    if (is_virtual(f)) e["h"] = build_virtual(f).str();
    list.push_back(e);
  }
  return {{"a", a}, {"bound", bound}, {"count", fams.size()}, {"families", list}};
}

std::vector<long long> parse_int_list(const std::string& s) {
  std::vector<long long> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',' || c == ' ') {
      if (cur.empty()) continue;
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(cur, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != cur.size() || v <= 0) throw std::invalid_argument("expected positive integers, got '" + s + "'");
      out.push_back(v);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

std::string dynkin_cmd(const std::string& target, const std::string& presentation, const std::string& format) {
  IntersectionMatrix m;
  std::string label = target;
  const auto& conv = frozen_edge_convention();
  if (presentation == "expanded") {
    const DiagramSpec* spec = nullptr;
    try {
      spec = &diagram_spec(target);
    } catch (const DynkinError& e) {
      throw std::invalid_argument(e.what());
    }
    m = gabrielov_expand(seed_diagram(spec->seed), spec->counts());
  } else if (presentation == "spqr") {
    auto g = parse_int_list(target);
    if (g.size() != 3) throw std::invalid_argument("spqr needs three integers");
    m = spqr_graph({g[0], g[1], g[2]}, conv);
    label = "S_" + target;
  } else {
    auto g = parse_int_list(target);
    if (g.size() != 4) throw std::invalid_argument("pi needs four integers");
    m = pi_graph({g[0], g[1], g[2], g[3]}, conv);
    label = "Pi_" + target;
  }
  if (format == "dot") return m.to_dot(label);
  json j = m.to_json();
  j["name"] = label;
  j["invariants"] = diagram_invariants(m).to_json();
  return j.dump(2) + "\n";
}

void load_fixtures(const std::string& path) {
  try {
    set_active_fixtures(Fixtures::from_file(path));
  } catch (const FixtureError& e) {
    throw std::invalid_argument(e.what());
  }
}

struct FixtureRestore {
  std::optional<Fixtures> saved;
  ~FixtureRestore() {
    if (saved) set_active_fixtures(std::move(*saved));
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Virtual singularities, strange duality and their invariants", "sdual"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json_out, "Emit JSON");
  app.add_option("--fixtures", g.fixtures, "Fixture file replacing the embedded tables");
  app.add_option("--grid-bound", g.grid_bound, "Parameter bound for grid sweeps")->check(CLI::Range(2LL, 400LL));
  app.add_option("--jobs", g.jobs, "Worker threads for sweeps (default: available cores)");

  std::string poly_text, family_text, name, scope = "all", target, presentation = "expanded", format = "dot",
                                         output, zeta_poly;
  int terms = 12;
  long long a = 1;
  std::optional<long long> bound;
  bool unreduced = false, strict = false;

  auto* classify = app.add_subcommand("classify", "Identify the type and parameters of an invertible polynomial");
  classify->add_option("polynomial", poly_text, "Polynomial in x, y, z")->required();

  auto add_family = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("family", family_text, "Family such as \"IIA 2 3 18\"");
    if (required) opt->required();
  };
  auto* dualize = app.add_subcommand("dualize", "Dual pair, virtual polynomial and Dolgachev/Gabrielov numbers");
  add_family(dualize, true);
  auto* virt = app.add_subcommand("virtual", "Virtual polynomial and its two top faces");
  add_family(virt, true);
  auto* weights = app.add_subcommand("weights", "Weight systems, symmetry group and grading index");
  add_family(weights, true);
  auto* poincare = app.add_subcommand("poincare", "Poincare series of the dual complete intersection");
  add_family(poincare, true);
  poincare->add_option("--terms", terms, "Number of series coefficients")->check(CLI::Range(0, 1000));
  auto* zeta = app.add_subcommand("zeta", "Reduced zeta function at infinity");
  add_family(zeta, false);
  zeta->add_option("--poly", zeta_poly, "Compute for an arbitrary polynomial in x, y, z");
  zeta->add_flag("--unreduced", unreduced, "Keep the factor (1-t)");
  auto* verify = app.add_subcommand("verify", "Run verification sweeps");
  verify->add_option("scope", scope, "weights|tables|duality|calibration|zeta|enumeration|bimodal|dynkin|all")
      ->check(CLI::IsMember([] {
        auto ids = suite_ids();
        ids.push_back("all");
        return ids;
      }()));
  verify->add_option("--family", family_text, "Restrict to one family");
  verify->add_option("--name", name, "Restrict to one named bimodal family");
  verify->add_flag("--strict", strict, "Require every grid member to pass, also outside the regime");
  auto* enumerate = app.add_subcommand("enumerate", "Virtual families with a given Gorenstein parameter");
  enumerate->add_option("a", a, "Gorenstein parameter")->required();
  enumerate->add_option("--bound", bound, "Parameter bound (default: --grid-bound)");
  auto* dynkin = app.add_subcommand("dynkin", "Export a Coxeter-Dynkin diagram");
  dynkin->add_option("target", target, "Name for expanded, or integers such as 2,3,10 for spqr/pi")->required();
  dynkin->add_option("--presentation", presentation, "expanded|spqr|pi")
      ->check(CLI::IsMember({"expanded", "spqr", "pi"}));
  dynkin->add_option("--format", format, "dot|json")->check(CLI::IsMember({"dot", "json"}));
  dynkin->add_option("-o,--output", output, "Write to a file instead of standard output");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  FixtureRestore restore;
  try {
    if (!g.fixtures.empty()) {
      restore.saved = active_fixtures();
      load_fixtures(g.fixtures);
    }
    std::optional<FamilyDescriptor> fam;
    if (!family_text.empty()) fam = FamilyDescriptor::parse(family_text);

    if (*classify) {
      emit(out, g, classify_cmd(poly_text));
    } else if (*dualize) {
      emit(out, g, dualize_cmd(*fam));
    } else if (*virt) {
      emit(out, g, virtual_cmd(*fam));
    } else if (*weights) {
      emit(out, g, weights_cmd(*fam));
    } else if (*poincare) {
      emit(out, g, poincare_cmd(*fam, terms));
    } else if (*zeta) {
      if (!fam && zeta_poly.empty()) throw std::invalid_argument("zeta needs a family or --poly");
      emit(out, g, zeta_cmd(fam, zeta_poly, unreduced));
    } else if (*enumerate) {
      emit(out, g, enumerate_cmd(a, bound.value_or(g.grid_bound)));
    } else if (*dynkin) {
      std::string text = dynkin_cmd(target, presentation, format);
      if (output.empty()) {
        out << text;
      } else {
        std::ofstream f(output, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write '" + output + "'");
        f << text;
      }
    } else if (*verify) {
      SweepOptions opts;
      opts.grid_bound = g.grid_bound;
      opts.jobs = g.jobs;
      opts.strict = strict;
      opts.family = fam;
      opts.name = name;
      std::vector<std::string> ids = scope == "all" ? suite_ids() : std::vector<std::string>{scope};
      std::vector<SuiteResult> results;
      for (const auto& id : ids) results.push_back(run_suite(id, opts));
      bool all = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.pass; });
      if (g.json_out) {
        json j{{"pass", all}, {"grid_bound", g.grid_bound}, {"strict", strict}, {"suites", json::array()}};
        for (const auto& r : results) j["suites"].push_back(r.to_json());
        out << j.dump(2) << "\n";
      } else {
        for (const auto& r : results) out << (r.pass ? "PASS " : "FAIL ") << r.id << ": " << r.summary << "\n";
        out << (all ? "PASS" : "FAIL") << " overall\n";
      }
      if (!all) return kExitVerificationFailed;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const FixtureError& e) {
    err << "fixture error: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitPass;
}

}  // namespace sdual
