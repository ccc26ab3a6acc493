#include "sdual/newton.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace sdual {

namespace {

IntVec to_vec(const Exps& e) { return IntVec(e.begin(), e.end()); }

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

long long dot(const IntVec& a, const IntVec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec cross(const IntVec& a, const IntVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

IntVec primitive(IntVec v) {
  long long g = 0;
  for (auto x : v) g = std::gcd(g, std::llabs(x));
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

long long lattice_length(const std::vector<IntVec>& on_line) {
  long long best = 0;
  for (std::size_t i = 0; i < on_line.size(); ++i)
    for (std::size_t j = i + 1; j < on_line.size(); ++j) {
      long long g = 0;
      for (auto x : sub(on_line[i], on_line[j])) g = std::gcd(g, std::llabs(x));
      best = std::max(best, g);
    }
  return best;
}

// Twice the area of the convex hull of 2D integer points.
long long twice_hull_area(std::vector<std::pair<long long, long long>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return 0;
  auto turn = [](const auto& o, const auto& a, const auto& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<long long, long long>> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && turn(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k - 1);
  long long a = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& p = hull[i];
    const auto& q = hull[(i + 1) % hull.size()];
    a += p.first * q.second - p.second * q.first;
  }
  return std::llabs(a);
}

// Orients `n` so that all points satisfy <n, q> <= value; returns false if the
// hyperplane does not support the point set.
bool orient(IntVec& n, long long& value, const std::vector<IntVec>& pts) {
  bool le = true, ge = true;
  for (const auto& q : pts) {
    long long s = dot(n, q) - value;
    if (s > 0) le = false;
    if (s < 0) ge = false;
  }
  if (le) return true;
  if (ge) {
    for (auto& x : n) x = -x;
    value = -value;
    return true;
  }
  return false;
}

Facet make_facet(const IntVec& n, long long value, const std::vector<IntVec>& pts,
                 const std::vector<Exps>& original) {
  Facet f;
  f.normal = n;
  f.value = value;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (dot(n, pts[i]) == value) f.points.push_back(original[i]);
  return f;
}

int point_rank(const std::vector<IntVec>& pts) {
  IntMatrix m;
  for (const auto& p : pts) m.push_back(p);
  return rank(m);
}

}  // namespace

std::vector<Facet> full_dimensional_facets(const std::vector<Exps>& points, int k) {
  std::vector<Exps> uniq = points;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  std::vector<IntVec> pts;
  for (const auto& e : uniq) pts.push_back(to_vec(e));
  std::map<std::pair<IntVec, long long>, Facet> found;
  auto record = [&](IntVec n, long long value) {
    if (!orient(n, value, pts)) return;
    auto key = std::make_pair(n, value);
    if (!found.count(key)) found.emplace(key, make_facet(n, value, pts, uniq));
  };
  if (k == 1) {
    for (const auto& p : pts) {
      record({1}, p[0]);
      record({-1}, -p[0]);
    }
    for (auto& [key, f] : found) f.volume = 1;
  } else if (k == 2) {
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        IntVec d = sub(pts[j], pts[i]);
        IntVec n = primitive({d[1], -d[0]});
        record(n, dot(n, pts[i]));
      }
    for (auto& [key, f] : found) {
      std::vector<IntVec> on;
      for (const auto& e : f.points) on.push_back(to_vec(e));
      f.volume = lattice_length(on);
    }
  } else if (k == 3) {
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        for (std::size_t l = j + 1; l < pts.size(); ++l) {
          IntVec n = cross(sub(pts[j], pts[i]), sub(pts[l], pts[i]));
          if (is_zero(n)) continue;
          n = primitive(n);
          record(n, dot(n, pts[i]));
        }
    for (auto& [key, f] : found) {
      int drop = 0;
      while (f.normal[drop] == 0) ++drop;
      std::vector<std::pair<long long, long long>> proj;
      for (const auto& e : f.points) {
        IntVec q = to_vec(e);
        IntVec r;
        for (int c = 0; c < 3; ++c)
          if (c != drop) r.push_back(q[c]);
        proj.emplace_back(r[0], r[1]);
      }
      f.volume = twice_hull_area(proj) / std::llabs(f.normal[drop]);
    }
  } else {
    throw std::invalid_argument("facet enumeration supports dimensions 1 to 3");
  }
  std::vector<Facet> out;
  for (auto& [key, f] : found) out.push_back(std::move(f));
  return out;
}

std::vector<Facet> NewtonPolygonAtInfinity::faces_avoiding_origin() const {
  std::vector<Facet> out;
  for (const auto& f : facets)
    if (f.value > 0) out.push_back(f);
  return out;
}

NewtonPolygonAtInfinity newton_polygon_at_infinity(const SparsePoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Newton polygon of the zero polynomial");
  if (p.nvars() != 3) throw std::invalid_argument("Newton polygon needs 3 variables");
  NewtonPolygonAtInfinity np;
  np.points = p.support();
  Exps origin(3, 0);
  if (std::find(np.points.begin(), np.points.end(), origin) == np.points.end())
    np.points.push_back(origin);
  std::sort(np.points.begin(), np.points.end());
  std::vector<IntVec> pts;
  for (const auto& e : np.points) pts.push_back(to_vec(e));
  np.dimension = point_rank(pts);
  if (np.dimension == 3) {
    np.facets = full_dimensional_facets(np.points, 3);
    return np;
  }
  std::map<std::pair<IntVec, long long>, Facet> found;
  auto record = [&](IntVec n, long long value) {
    if (!orient(n, value, pts)) return;
    auto key = std::make_pair(n, value);
    if (!found.count(key)) found.emplace(key, make_facet(n, value, pts, np.points));
  };
  if (np.dimension == 2) {
    IntVec N;
    for (std::size_t i = 0; i < pts.size() && N.empty(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        IntVec c = cross(pts[i], pts[j]);
        if (!is_zero(c)) {
          N = c;
          break;
        }
      }
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        IntVec n = primitive(cross(N, sub(pts[j], pts[i])));
        if (is_zero(n)) continue;
        record(n, dot(n, pts[i]));
      }
    for (auto& [key, f] : found) {
      std::vector<IntVec> on;
      for (const auto& e : f.points) on.push_back(to_vec(e));
      f.volume = lattice_length(on);
    }
  } else if (np.dimension == 1) {
    IntVec u;
    for (const auto& q : pts)
      if (!is_zero(q)) u = primitive(q);
    for (const auto& q : pts) record(u, dot(u, q));
    for (auto& [key, f] : found) f.volume = 1;
  }
  for (auto& [key, f] : found) np.facets.push_back(std::move(f));
  return np;
}

std::pair<SparsePoly, SparsePoly> top_faces_split(const SparsePoly& h,
                                                  const WeightSystem* reference) {
  auto np = newton_polygon_at_infinity(h);
  auto top = np.faces_avoiding_origin();
  if (np.dimension != 3 || top.size() != 2)
    throw SplitError("Newton polygon at infinity has " + std::to_string(top.size()) +
                     " faces avoiding the origin, expected 2");
  auto weights_of = [](const Facet& f) {
    return WeightSystem{f.normal, {f.value}};
  };
  std::size_t second = 1;
  if (reference) {
    auto ref = reduce_weights(*reference).first;
    bool m0 = weights_of(top[0]) == ref, m1 = weights_of(top[1]) == ref;
    if (!m0 && !m1) throw SplitError("no face carries the reference weight system");
    second = m1 ? 1 : 0;
  }
  const Facet& f1 = top[1 - second];
  const Facet& f2 = top[second];
  return {h.sub_sum(f1.points), h.sub_sum(f2.points)};
}

}  // namespace sdual
