#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdual/families.hpp"
#include "sdual/grading.hpp"
#include "sdual/poly.hpp"

namespace sdual {

class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OrbitRecord {
  std::vector<int> stratum;  // coordinates allowed to be nonzero
  std::string description;
  long long isotropy_order = 1;
  long long count = 1;
  bool principal = false;
  nlohmann::json to_json() const;
};

// Number of C*-orbits in the torus of a coordinate stratum on which all polys vanish.
struct StratumCount {
  enum class Kind { Finite, Infinite, Unsolved } kind = Kind::Finite;
  long long count = 0;
};
StratumCount count_stratum_orbits(const std::vector<SparsePoly>& polys,
                                  const std::vector<int>& stratum,
                                  const std::vector<long long>& weights);

struct SurfaceOrbits {
  std::vector<OrbitRecord> orbits;
  bool unsolved = false;          // some stratum was outside the solvable fragment
  bool singular_orbit = false;    // a singular point off the coordinate axes
  std::vector<long long> principal_orders() const;
};
SurfaceOrbits analyse_surface_orbits(const SparsePoly& h, const WeightSystem& W);
// Throws InvariantError unless exactly two principal orbits are found, both with
// non-trivial isotropy.
std::vector<OrbitRecord> exceptional_orbits_surface(const SparsePoly& h, const WeightSystem& W);

struct IcisOrbits {
  std::vector<OrbitRecord> orbits;  // orbits with non-trivial isotropy
  bool unsolved = false;
  std::vector<long long> orders() const;
};
IcisOrbits analyse_icis_orbits(const SparsePoly& f1, const SparsePoly& f2,
                               const WeightSystem& W);

// When the orbit analysis does not produce the expected shape, the closed form is
// returned and *fallback is set.
std::vector<long long> dolgachev_virtual(const FamilyDescriptor& fam, bool* fallback = nullptr);
std::vector<long long> dolgachev_icis(const FamilyDescriptor& fam, bool* fallback = nullptr);
std::vector<long long> gabrielov_virtual(const FamilyDescriptor& fam);
std::vector<long long> gabrielov_icis(const FamilyDescriptor& fam);

bool multiset_equal(std::vector<long long> a, std::vector<long long> b);
// (a1,a2;a3,a4) against (b1,b2;b3,b4): the two pairs as multisets, up to swapping the pairs.
bool grouped_equal(const std::vector<long long>& a, const std::vector<long long>& b);

struct DualityReport {
  FamilyDescriptor family;
  std::vector<long long> dol_virtual, gab_virtual, dol_icis, gab_icis;
  bool gab_h_matches_dol_icis = false;
  bool gab_icis_matches_dol_h = false;
  bool closed_forms_match = false;  // every side computed from orbits agrees with its closed form
  bool fallback = false;
  bool pass() const { return gab_h_matches_dol_icis && gab_icis_matches_dol_h && closed_forms_match; }
  nlohmann::json to_json() const;
};
DualityReport verify_strange_duality(const FamilyDescriptor& fam);

// The range in which the duality statements apply: h has four monomials and two
// reduced top faces, h2 carries the reduced weights of f, each face has exactly two
// principal orbits, and the complete intersection has exactly three isotropic points.
struct RegimeReport {
  bool ok = false;
  std::string reason;
};
RegimeReport regime_check(const FamilyDescriptor& fam);
bool in_regime(const FamilyDescriptor& fam);

std::string format_tuple(const std::vector<long long>& v, bool grouped);

}  // namespace sdual
