#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sdual/families.hpp"
#include "sdual/formula.hpp"
#include "sdual/grading.hpp"
#include "sdual/poly.hpp"

namespace sdual {

// p1, p2, p3, and q2, q3 for type III.
Bindings bindings(const FamilyDescriptor& fam);

// Key of the closed-form row for a family, either by base type or by virtual tag.
std::string base_key(FamilyType t);
std::string virtual_key(FamilyType t);

struct ChangeRow {
  std::string type;
  bool is_virtual = false;
  std::string lhs, rhs;
  std::string var, replacement, h;
};

std::vector<ChangeRow> change_rows();
// Row whose type and condition match the family, if any.
bool find_change_row(const FamilyDescriptor& fam, ChangeRow* out);
SparsePoly instantiate_poly(const std::string& tmpl, const FamilyDescriptor& fam,
                            const std::vector<std::string>& vars);

SparsePoly closed_special_F(const FamilyDescriptor& fam);
std::pair<SparsePoly, SparsePoly> closed_dual_pair(const FamilyDescriptor& fam);
SparsePoly closed_virtual(const FamilyDescriptor& fam);
std::pair<SparsePoly, SparsePoly> closed_split(const FamilyDescriptor& fam);
std::pair<WeightSystem, WeightSystem> closed_weight_systems(const FamilyDescriptor& fam);
WeightSystem closed_pair_weights(const FamilyDescriptor& fam);
// Dolgachev (3) and Gabrielov (4) numbers of the invertible polynomial f.
std::vector<long long> closed_dolgachev_f(const FamilyDescriptor& fam);
std::vector<long long> closed_gabrielov_f(const FamilyDescriptor& fam);
// Dolgachev (4) and Gabrielov (3) numbers of the virtual polynomial h.
std::vector<long long> closed_dolgachev_h(const FamilyDescriptor& fam);
std::vector<long long> closed_gabrielov_h(const FamilyDescriptor& fam);

}  // namespace sdual
