#pragma once

#include <gmpxx.h>

#include <json.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdual {

using Exps = std::vector<int>;

// Graded lexicographic order; the first variable is the most significant.
struct GrlexLess {
  bool operator()(const Exps& a, const Exps& b) const;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class SparsePoly {
 public:
  using TermMap = std::map<Exps, mpq_class, GrlexLess>;

  SparsePoly() = default;
  explicit SparsePoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static SparsePoly monomial(const std::vector<std::string>& vars, const Exps& e,
                             const mpq_class& c = 1);
  static SparsePoly constant(const std::vector<std::string>& vars, const mpq_class& c);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t nvars() const { return vars_.size(); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  int var_index(const std::string& name) const;

  mpq_class coeff(const Exps& e) const;
  void add_term(const Exps& e, const mpq_class& c);
  std::vector<Exps> support() const;

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly operator-() const;
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const mpq_class& c);
  friend bool operator==(const SparsePoly& a, const SparsePoly& b);
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

  SparsePoly pow(unsigned n) const;
  SparsePoly derivative(std::size_t var) const;
  // Sets every variable outside `keep` to zero.
  SparsePoly restrict_to(const std::vector<bool>& keep) const;
  SparsePoly sub_sum(const std::vector<Exps>& exps) const;

  bool is_weighted_homogeneous(const std::vector<long long>& w, long long* degree) const;

  std::string str() const;
  nlohmann::json to_json() const;

 private:
  void check_compatible(const SparsePoly& o) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const SparsePoly& p);

SparsePoly parse_poly(const std::string& text, const std::vector<std::string>& vars);

SparsePoly substitute(const SparsePoly& p, const std::string& var, const SparsePoly& replacement);

const std::vector<std::string>& xyz_vars();
const std::vector<std::string>& XYZW_vars();

}  // namespace sdual
