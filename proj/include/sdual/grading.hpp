#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdual {

using IntMatrix = std::vector<std::vector<long long>>;

struct WeightSystem {
  std::vector<long long> weights;
  std::vector<long long> degrees;

  long long gcd() const;
  bool is_reduced() const { return gcd() == 1; }
  std::string str() const;
  nlohmann::json to_json() const;
  friend bool operator==(const WeightSystem& a, const WeightSystem& b) {
    return a.weights == b.weights && a.degrees == b.degrees;
  }
  friend bool operator!=(const WeightSystem& a, const WeightSystem& b) { return !(a == b); }
};

struct FiniteAbelianGroup {
  std::vector<long long> invariant_factors;
  long long order() const;
  nlohmann::json to_json() const;
};

struct SmithForm {
  IntMatrix U, D, V;
};

class SingularMatrix : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

long long det(const IntMatrix& m);
IntMatrix adjugate3(const IntMatrix& m);
IntMatrix transpose(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity(std::size_t n);
int rank(const IntMatrix& m);

WeightSystem canonical_weights(const IntMatrix& E);
std::pair<WeightSystem, long long> reduce_weights(const WeightSystem& w);
long long gorenstein_parameter(const WeightSystem& reduced);

SmithForm smith_normal_form(const IntMatrix& m);
FiniteAbelianGroup symmetry_group(const IntMatrix& E);
long long grading_index(const IntMatrix& E);
// Brute-force count of the elements of the diagonal symmetry group fixing the
// all-ones exponent vector; used as an independent check of grading_index.
long long grading_index_bruteforce(const IntMatrix& E);
// Number of elements of the symmetry group of the transpose lying in SL_n,
// or -1 when the group has more than `limit` elements.
long long dual_sl_count(const IntMatrix& E, long long limit = 1000000);
std::vector<long long> kernel_primitive(const IntMatrix& E);
// Lattice basis of {v in Z^cols : M v = 0}.
std::vector<std::vector<long long>> integer_kernel(const IntMatrix& M);

}  // namespace sdual
