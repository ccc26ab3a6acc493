#pragma once

#include <array>
#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdual/grading.hpp"

namespace sdual {

class DynkinError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IntersectionMatrix {
  std::vector<std::string> labels;
  IntMatrix entries;

  std::size_t size() const { return labels.size(); }
  long long at(std::size_t i, std::size_t j) const { return entries[i][j]; }
  // Throws DynkinError unless the matrix is square, symmetric, with diagonal -2.
  void check() const;
  friend bool operator==(const IntersectionMatrix& a, const IntersectionMatrix& b) {
    return a.entries == b.entries;
  }

  nlohmann::json to_json() const;
  std::string to_dot(const std::string& name = "G") const;
};

struct EdgeConvention {
  long long plain = 1;
  long long dbl = -2;
  long long dashed = -1;
  nlohmann::json to_json() const;
  friend bool operator==(const EdgeConvention& a, const EdgeConvention& b) {
    return a.plain == b.plain && a.dbl == b.dbl && a.dashed == b.dashed;
  }
};
// The convention stored with the fixtures.
EdgeConvention default_edge_convention();

IntersectionMatrix seed_diagram(char kind);
IntersectionMatrix gabrielov_expand(const IntersectionMatrix& seed, const std::vector<long long>& M);
IntersectionMatrix spqr_graph(const std::array<long long, 3>& gamma,
                              const EdgeConvention& conv = default_edge_convention());
IntersectionMatrix pi_graph(const std::array<long long, 4>& gamma,
                            const EdgeConvention& conv = default_edge_convention());

// Positions are 1-based: the pair (i, i+1) is replaced by (b, s_b(a)), or by (b + <a,b>a, a)
// for the inverse move.
IntersectionMatrix braid_move(const IntersectionMatrix& m, std::size_t i, bool inverse = false);
IntersectionMatrix negate_basis_vector(const IntersectionMatrix& m, std::size_t i);

// Coefficients of det(t - C) from t^n down to t^0, C the product of the reflections in basis order.
std::vector<long long> coxeter_charpoly(const IntersectionMatrix& m);
std::string integer_poly_str(const std::vector<long long>& coeffs);
long long gram_determinant(const IntersectionMatrix& m);
int gram_rank(const IntersectionMatrix& m);

struct DiagramInvariants {
  std::vector<long long> charpoly;
  long long determinant = 0;
  int rank = 0;
  friend bool operator==(const DiagramInvariants& a, const DiagramInvariants& b) {
    return a.charpoly == b.charpoly && a.determinant == b.determinant && a.rank == b.rank;
  }
  nlohmann::json to_json() const;
};
DiagramInvariants diagram_invariants(const IntersectionMatrix& m);

// Gram matrices equal up to changing the signs of some basis vectors.
bool equal_up_to_signs(const IntersectionMatrix& a, const IntersectionMatrix& b);

struct BraidSearchResult {
  bool found = false;
  std::vector<std::pair<std::size_t, bool>> moves;  // (position, inverse)
  std::size_t explored = 0;
  bool truncated = false;
  nlohmann::json to_json() const;
};
// Breadth-first search over braid moves, returning the lexicographically least shortest sequence.
BraidSearchResult braid_search(const IntersectionMatrix& from, const IntersectionMatrix& to,
                               int max_depth = 12, std::size_t max_states = 200000);

struct DiagramSpec {
  std::string name;
  char seed = 'a';
  std::vector<std::vector<long long>> M;      // summands as listed, e.g. {{7,1},{7}}
  std::vector<std::vector<long long>> gamma;  // e.g. {{2},{3},{9,1}}
  long long mu = 0;
  std::vector<long long> counts() const;
  std::array<long long, 3> gabrielov() const;
  static DiagramSpec from_json(const nlohmann::json& row);
};
std::vector<DiagramSpec> diagram_specs();
const DiagramSpec& diagram_spec(const std::string& name);

struct DiagramComparison {
  DiagramSpec spec;
  IntersectionMatrix expanded, spqr;
  DiagramInvariants expanded_inv, spqr_inv;
  bool counts_match = false;  // sum of M and of gamma both equal mu
  bool pass() const { return counts_match && expanded_inv == spqr_inv; }
  nlohmann::json to_json() const;
};
DiagramComparison compare_diagrams(const DiagramSpec& spec, const EdgeConvention& conv);

// Chooses the double-edge weight under which every row's invariants agree, preferring the
// stored convention; throws DynkinError when no candidate works.
EdgeConvention calibrate_edge_convention(const std::vector<DiagramSpec>& specs);
const EdgeConvention& frozen_edge_convention();

}  // namespace sdual
