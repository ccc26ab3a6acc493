#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "sdual/grading.hpp"
#include "sdual/poly.hpp"

namespace sdual {

using IntVec = std::vector<long long>;

struct Facet {
  IntVec normal;  // primitive outward covector
  long long value = 0;
  std::vector<Exps> points;
  // Lattice-normalised volume of the facet (length for edges, twice the lattice
  // area for 2-faces, 1 for vertices).
  long long volume = 0;
};

struct NewtonPolygonAtInfinity {
  std::vector<Exps> points;  // support plus the origin
  int dimension = 0;
  std::vector<Facet> facets;
  std::vector<Facet> faces_avoiding_origin() const;
};

class SplitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

NewtonPolygonAtInfinity newton_polygon_at_infinity(const SparsePoly& p);

// Facets of conv(points) for points in Z^k spanning Z^k (full-dimensional case only).
std::vector<Facet> full_dimensional_facets(const std::vector<Exps>& points, int k);

// Returns (h1, h2). With `reference` given, h2 is the face whose reduced weight
// system equals it; otherwise faces are ordered by their covectors.
std::pair<SparsePoly, SparsePoly> top_faces_split(const SparsePoly& h,
                                                  const WeightSystem* reference = nullptr);
inline std::pair<SparsePoly, SparsePoly> top_faces_split(const SparsePoly& h,
                                                         const WeightSystem& reference) {
  return top_faces_split(h, &reference);
}

}  // namespace sdual
