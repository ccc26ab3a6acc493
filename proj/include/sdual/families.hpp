#pragma once

#include <array>
#include <json.hpp>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sdual/grading.hpp"
#include "sdual/poly.hpp"

namespace sdual {

enum class FamilyType { I, IIA, IIB, IIBs, III, IV, IV1, IV2, IV2s };

std::string type_name(FamilyType t);
FamilyType parse_type(const std::string& s);
// Type of the underlying invertible polynomial: IIB# -> IIB, IV1/IV2/IV2# -> IV.
FamilyType base_type(FamilyType t);
// Tags that can label a virtual family: IIA, IIB, IIB#, III, IV1, IV2, IV2#.
bool is_virtual_type(FamilyType t);
bool is_sharp_type(FamilyType t);

class InvalidFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotVirtual : public InvalidFamily {
 public:
  using InvalidFamily::InvalidFamily;
};

class ClassifyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters are (p1,p2,p3), or (p1,q2,q3) for type III.
struct FamilyDescriptor {
  FamilyType type = FamilyType::I;
  std::array<long long, 3> params{};
  std::string name;

  std::string str() const;
  nlohmann::json to_json() const;
  static FamilyDescriptor from_json(const nlohmann::json& j);
  // Accepts "IIA 2 3 18", "IIA(2,3,18)" or "IIA 2,3,18".
  static FamilyDescriptor parse(const std::string& text);

  friend bool operator==(const FamilyDescriptor& a, const FamilyDescriptor& b) {
    return a.type == b.type && a.params == b.params;
  }
  friend bool operator<(const FamilyDescriptor& a, const FamilyDescriptor& b) {
    if (a.type != b.type) return a.type < b.type;
    return a.params < b.params;
  }
};

// Parity and divisibility constraints of the base type, grading index 2, and the
// defining condition for the tags IIB#, IV1, IV2, IV2#.
void validate(const FamilyDescriptor& fam);
bool is_valid(const FamilyDescriptor& fam);
// Valid and satisfying the condition under which h has four monomials.
bool is_virtual(const FamilyDescriptor& fam);

IntMatrix exponent_matrix(const FamilyDescriptor& fam);
SparsePoly invertible_polynomial(const FamilyDescriptor& fam);
WeightSystem reduced_weights(const FamilyDescriptor& fam);
long long gorenstein_parameter(const FamilyDescriptor& fam);

FamilyDescriptor classify_invertible(const IntMatrix& E);
FamilyDescriptor classify_invertible(const SparsePoly& f);
// Matches the exponent pattern and parity constraints of a type without requiring
// grading index 2.
FamilyDescriptor classify_shape(const IntMatrix& E);
FamilyDescriptor classify_shape(const SparsePoly& f);

IntMatrix extension_matrix(const FamilyDescriptor& fam);
SparsePoly build_special_F(const FamilyDescriptor& fam);

// Monomials of the reduced degree of f, other than pure powers, which appended to E
// keep the quotient of Z^4 by the rows (E_i, -1) torsion free.
std::vector<Exps> fourth_row_candidates(const FamilyDescriptor& fam);
// The fourth rows the extension list predicts for the base type of fam.
std::vector<Exps> expected_fourth_rows(const FamilyDescriptor& fam);

struct DualPair {
  SparsePoly f1, f2;
  WeightSystem weights;
  std::vector<long long> kernel;
  // True when the weights could be scaled so that deg f2 is the reduced degree of f.
  bool degree_normalised = true;
  nlohmann::json to_json() const;
};

SparsePoly transpose_polynomial(const IntMatrix& E4);
DualPair build_dual_pair(const FamilyDescriptor& fam);

// The coordinate change (variable, replacement) turning F - xyz into h - xyz.
std::pair<std::string, SparsePoly> coordinate_change(const FamilyDescriptor& fam);
// Applies a coordinate change to the special polynomial of fam; works for the
// non-virtual changes as well.
SparsePoly transform_special(const FamilyDescriptor& fam, const std::string& var,
                             const SparsePoly& replacement);
SparsePoly build_virtual(const FamilyDescriptor& fam);

struct VirtualSplit {
  SparsePoly h1, h2;
  WeightSystem w1, w2;  // canonical systems of weights of h1, h2
  bool reference_matched = true;  // h2 carries the reduced weights of f
};
VirtualSplit virtual_split(const FamilyDescriptor& fam);
std::pair<WeightSystem, WeightSystem> virtual_weight_systems(const FamilyDescriptor& fam);

// All descriptors of the base types I, IIA, IIB, III, IV with parameters <= bound.
std::vector<FamilyDescriptor> family_grid(long long bound);
// All virtual descriptors (IIA, IIB, IIB#, III, IV1, IV2, IV2#) with parameters <= bound.
std::vector<FamilyDescriptor> virtual_grid(long long bound);

std::vector<FamilyDescriptor> enumerate_by_gorenstein(long long a, long long bound);

}  // namespace sdual
