#pragma once

#include <gmpxx.h>

#include <vector>

#include "sdual/poly.hpp"

namespace sdual {

// Dense univariate polynomial over Q; coefficient i belongs to t^i.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<mpq_class> coeffs);

  // p must involve at most the variable `var`.
  static UniPoly from_sparse(const SparsePoly& p, std::size_t var);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  const mpq_class& lead() const { return c_.back(); }

  UniPoly derivative() const;
  UniPoly monic() const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<mpq_class> c_;
};

void divmod(const UniPoly& a, const UniPoly& b, UniPoly* q, UniPoly* r);
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly squarefree_part(const UniPoly& p);
// Number of distinct roots in C \ {0}.
int distinct_nonzero_roots(const UniPoly& p);

}  // namespace sdual
