#pragma once

#include <array>
#include <json.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdual/families.hpp"
#include "sdual/grading.hpp"
#include "sdual/poly.hpp"

namespace sdual {

// prod_m (1 - t^m)^{alpha_m}
class CyclotomicProduct {
 public:
  CyclotomicProduct() = default;
  explicit CyclotomicProduct(const std::map<long long, long long>& exps);

  const std::map<long long, long long>& exponents() const { return e_; }
  long long exponent(long long m) const;
  void multiply_factor(long long m, long long alpha);
  long long degree() const;
  bool is_one() const { return e_.empty(); }
  // Power series coefficients up to t^n (inclusive), for sanity checks only.
  std::vector<long long> series(int n) const;
  // prod (t^m - 1)^{alpha_m} as integer coefficients, highest degree first; throws
  // std::domain_error when the product is not a polynomial.
  std::vector<long long> polynomial() const;

  CyclotomicProduct& operator*=(const CyclotomicProduct& o);
  CyclotomicProduct& operator/=(const CyclotomicProduct& o);
  friend CyclotomicProduct operator*(CyclotomicProduct a, const CyclotomicProduct& b) { return a *= b; }
  friend CyclotomicProduct operator/(CyclotomicProduct a, const CyclotomicProduct& b) { return a /= b; }
  friend bool operator==(const CyclotomicProduct& a, const CyclotomicProduct& b) { return a.e_ == b.e_; }
  friend bool operator!=(const CyclotomicProduct& a, const CyclotomicProduct& b) { return !(a == b); }

  // "(1-t^16)(1-t^18)/((1-t)(1-t^6))"
  std::string str() const;
  nlohmann::json to_json() const;

 private:
  std::map<long long, long long> e_;
};

CyclotomicProduct poincare_series(const WeightSystem& W);
CyclotomicProduct orbit_polynomial(const std::vector<long long>& dolgachev);
CyclotomicProduct saito_dual(const CyclotomicProduct& z, long long d);
CyclotomicProduct milnor_orlik(const WeightSystem& W);

// Sign attached to the faces lying in coordinate subspaces of dimension 1, 2, 3.
struct ZetaConvention {
  std::array<int, 3> epsilon{0, 0, 0};
  bool calibrated() const { return epsilon[0] != 0; }
};

class CalibrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Isolated quasihomogeneous polynomials in x, y, z used for calibration.
std::vector<SparsePoly> calibration_suite();
// The sign schedules under which zeta_infinity agrees with milnor_orlik on every
// polynomial of the suite; throws unless exactly one schedule survives.
ZetaConvention calibrate_zeta(const std::vector<SparsePoly>& suite);
// Calibrated once against calibration_suite() and then frozen.
const ZetaConvention& frozen_convention();

CyclotomicProduct zeta_infinity(const SparsePoly& h, bool reduced,
                                const ZetaConvention& conv);
CyclotomicProduct zeta_infinity(const SparsePoly& h, bool reduced = false);

// True when every face of the Newton polygon at infinity avoiding the origin has
// affinely independent exponents, which rules out torus critical points.
bool newton_nondegenerate_certified(const SparsePoly& h);

struct ZetaReport {
  FamilyDescriptor family;
  CyclotomicProduct zeta_reduced, poincare, orbit, rhs;
  bool pass = false;
  bool nondegenerate_certified = false;
  nlohmann::json to_json() const;
};
ZetaReport verify_zeta_identity(const FamilyDescriptor& fam);

}  // namespace sdual
