#include "sdual/tables.hpp"

#include <algorithm>

#include "sdual/fixtures.hpp"

namespace sdual {

namespace {

std::vector<long long> eval_list(const nlohmann::json& list, const Bindings& env) {
  std::vector<long long> out;
  for (const auto& e : list) out.push_back(eval_integer(e.get<std::string>(), env));
  return out;
}

const nlohmann::json& virtual_row(const std::string& table, const FamilyDescriptor& fam) {
  return active_fixtures().row(table, "type", virtual_key(fam.type));
}

const nlohmann::json& base_row(const std::string& table, const FamilyDescriptor& fam) {
  return active_fixtures().row(table, "type", base_key(fam.type));
}

}  // namespace

Bindings bindings(const FamilyDescriptor& fam) {
  Bindings env;
  env["p1"] = mpq_class(static_cast<long>(fam.params[0]));
  env["p2"] = mpq_class(static_cast<long>(fam.params[1]));
  env["p3"] = mpq_class(static_cast<long>(fam.params[2]));
  if (base_type(fam.type) == FamilyType::III) {
    env["q2"] = env["p2"];
    env["q3"] = env["p3"];
  }
  return env;
}

std::string base_key(FamilyType t) {
  switch (t) {
    case FamilyType::IIBs:
      return "IIB#";
    case FamilyType::IV1:
    case FamilyType::IV2:
      return "IV";
    case FamilyType::IV2s:
      return "IV#";
    default:
      return type_name(t);
  }
}

std::string virtual_key(FamilyType t) { return type_name(t); }

std::vector<ChangeRow> change_rows() {
  std::vector<ChangeRow> rows;
  for (const auto& r : active_fixtures().table("coordinate_changes")) {
    ChangeRow c;
    c.type = r.at("type").get<std::string>();
    c.is_virtual = r.at("virtual").get<bool>();
    c.lhs = r.at("condition").at(0).get<std::string>();
    c.rhs = r.at("condition").at(1).get<std::string>();
    c.var = r.at("var").get<std::string>();
    c.replacement = r.at("replacement").get<std::string>();
    c.h = r.at("h").get<std::string>();
    rows.push_back(c);
  }
  return rows;
}

bool find_change_row(const FamilyDescriptor& fam, ChangeRow* out) {
  Bindings env = bindings(fam);
  auto rows = change_rows();
  std::stable_partition(rows.begin(), rows.end(), [](const ChangeRow& r) { return r.is_virtual; });
  for (const auto& r : rows) {
    if (r.type != type_name(fam.type)) continue;
    if (eval_formula(r.lhs, env) != eval_formula(r.rhs, env)) continue;
    if (out) *out = r;
    return true;
  }
  return false;
}

SparsePoly instantiate_poly(const std::string& tmpl, const FamilyDescriptor& fam,
                            const std::vector<std::string>& vars) {
  return parse_poly(instantiate_template(tmpl, bindings(fam)), vars);
}

SparsePoly closed_special_F(const FamilyDescriptor& fam) {
  const auto& r = base_row("dual_pairs", fam);
  return instantiate_poly(r.at("F").get<std::string>(), fam, xyz_vars());
}

std::pair<SparsePoly, SparsePoly> closed_dual_pair(const FamilyDescriptor& fam) {
  const auto& r = base_row("dual_pairs", fam);
  return {instantiate_poly(r.at("f1").get<std::string>(), fam, XYZW_vars()),
          instantiate_poly(r.at("f2").get<std::string>(), fam, XYZW_vars())};
}

SparsePoly closed_virtual(const FamilyDescriptor& fam) {
  ChangeRow row;
  if (!find_change_row(fam, &row))
    throw NotVirtual("no coordinate change row for " + fam.str());
  return instantiate_poly(row.h, fam, xyz_vars());
}

std::pair<SparsePoly, SparsePoly> closed_split(const FamilyDescriptor& fam) {
  const auto& r = virtual_row("virtual_faces", fam);
  return {instantiate_poly(r.at("h1").get<std::string>(), fam, xyz_vars()),
          instantiate_poly(r.at("h2").get<std::string>(), fam, xyz_vars())};
}

std::pair<WeightSystem, WeightSystem> closed_weight_systems(const FamilyDescriptor& fam) {
  const auto& r = virtual_row("face_weights", fam);
  Bindings env = bindings(fam);
  WeightSystem w1{eval_list(r.at("w1"), env), {eval_integer(r.at("d1").get<std::string>(), env)}};
  WeightSystem w2{eval_list(r.at("w2"), env), {eval_integer(r.at("d2").get<std::string>(), env)}};
  return {w1, w2};
}

WeightSystem closed_pair_weights(const FamilyDescriptor& fam) {
  const auto& r = virtual_row("pair_weights", fam);
  Bindings env = bindings(fam);
  return WeightSystem{eval_list(r.at("weights"), env), eval_list(r.at("degrees"), env)};
}

std::vector<long long> closed_dolgachev_f(const FamilyDescriptor& fam) {
  return eval_list(base_row("invariants_f", fam).at("dolgachev"), bindings(fam));
}

std::vector<long long> closed_gabrielov_f(const FamilyDescriptor& fam) {
  return eval_list(base_row("invariants_f", fam).at("gabrielov"), bindings(fam));
}

std::vector<long long> closed_dolgachev_h(const FamilyDescriptor& fam) {
  return eval_list(virtual_row("invariants_h", fam).at("dolgachev"), bindings(fam));
}

std::vector<long long> closed_gabrielov_h(const FamilyDescriptor& fam) {
  return eval_list(virtual_row("invariants_h", fam).at("gabrielov"), bindings(fam));
}

}  // namespace sdual
