#include "sdual/series.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "sdual/invariants.hpp"
#include "sdual/newton.hpp"

namespace sdual {

CyclotomicProduct::CyclotomicProduct(const std::map<long long, long long>& exps) {
  for (const auto& [m, a] : exps) multiply_factor(m, a);
}

long long CyclotomicProduct::exponent(long long m) const {
  auto it = e_.find(m);
  return it == e_.end() ? 0 : it->second;
}

void CyclotomicProduct::multiply_factor(long long m, long long alpha) {
  if (m <= 0) throw std::invalid_argument("cyclotomic factor with non-positive index");
  if (alpha == 0) return;
  long long& v = e_[m];
  v += alpha;
  if (v == 0) e_.erase(m);
}

long long CyclotomicProduct::degree() const {
  long long d = 0;
  for (const auto& [m, a] : e_) d += m * a;
  return d;
}

std::vector<long long> CyclotomicProduct::series(int n) const {
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  for (const auto& [m, a] : e_) {
    for (long long r = 0; r < std::llabs(a); ++r) {
      if (a > 0) {
        for (int i = n; i >= m; --i) c[i] -= c[i - m];
      } else {
        for (int i = static_cast<int>(m); i <= n; ++i) c[i] += c[i - m];
      }
    }
  }
  return c;
}

std::vector<long long> CyclotomicProduct::polynomial() const {
  // Coefficients indexed by ascending degree while building.
  std::vector<long long> c{1};
  for (const auto& [m, a] : e_)
    for (long long r = 0; r < a; ++r) {
      std::vector<long long> n(c.size() + m, 0);
      for (std::size_t i = 0; i < c.size(); ++i) {
        n[i + m] += c[i];
        n[i] -= c[i];
      }
      c = std::move(n);
    }
  for (const auto& [m, a] : e_)
    for (long long r = 0; r > a; --r) {
      if (c.size() <= static_cast<std::size_t>(m)) throw std::domain_error("not a polynomial");
      // Divide by t^m - 1: q[i] = c[i + m] + q[i + m].
      std::vector<long long> q(c.size() - m, 0);
      for (long long i = static_cast<long long>(q.size()) - 1; i >= 0; --i)
        q[i] = c[i + m] + (i + m < static_cast<long long>(q.size()) ? q[i + m] : 0);
      for (long long i = 0; i < m; ++i)
        if (c[i] + (i < static_cast<long long>(q.size()) ? q[i] : 0) != 0)
          throw std::domain_error("not a polynomial");
      c = std::move(q);
    }
  return std::vector<long long>(c.rbegin(), c.rend());
}

CyclotomicProduct& CyclotomicProduct::operator*=(const CyclotomicProduct& o) {
  for (const auto& [m, a] : o.e_) multiply_factor(m, a);
  return *this;
}

CyclotomicProduct& CyclotomicProduct::operator/=(const CyclotomicProduct& o) {
  for (const auto& [m, a] : o.e_) multiply_factor(m, -a);
  return *this;
}

namespace {

std::string factor_str(long long m, long long a) {
  std::string s = m == 1 ? "(1-t)" : "(1-t^" + std::to_string(m) + ")";
  if (a > 1) s += "^" + std::to_string(a);
  return s;
}

std::string factors_str(const std::vector<std::pair<long long, long long>>& fs) {
  std::string s;
  for (const auto& [m, a] : fs) s += factor_str(m, a);
  return s;
}

}  // namespace

std::string CyclotomicProduct::str() const {
  std::vector<std::pair<long long, long long>> num, den;
  for (const auto& [m, a] : e_) (a > 0 ? num : den).emplace_back(m, std::llabs(a));
  auto one_last = [](std::vector<std::pair<long long, long long>>& v) {
    std::stable_partition(v.begin(), v.end(), [](const auto& p) { return p.first != 1; });
  };
  one_last(num);
  one_last(den);
  std::string s = num.empty() ? "1" : factors_str(num);
  if (!den.empty()) {
    bool single = den.size() == 1;
    s += single ? "/" + factors_str(den) : "/(" + factors_str(den) + ")";
  }
  return s;
}

nlohmann::json CyclotomicProduct::to_json() const {
  nlohmann::json f = nlohmann::json::object();
  for (const auto& [m, a] : e_) f[std::to_string(m)] = a;
  return {{"factors", f}, {"degree", degree()}, {"text", str()}};
}

CyclotomicProduct poincare_series(const WeightSystem& W) {
  CyclotomicProduct p;
  for (long long d : W.degrees) p.multiply_factor(d, 1);
  for (long long w : W.weights) p.multiply_factor(w, -1);
  return p;
}

CyclotomicProduct orbit_polynomial(const std::vector<long long>& dol) {
  CyclotomicProduct p;
  for (long long a : dol) p.multiply_factor(a, 1);
  p.multiply_factor(1, -1);
  return p;
}

CyclotomicProduct saito_dual(const CyclotomicProduct& z, long long d) {
  if (d <= 0) throw std::invalid_argument("Saito dual needs a positive degree");
  CyclotomicProduct out;
  for (const auto& [m, a] : z.exponents()) {
    if (d % m != 0)
      throw std::invalid_argument("factor 1-t^" + std::to_string(m) + " does not divide degree " +
                                  std::to_string(d));
    out.multiply_factor(d / m, -a);
  }
  return out;
}

CyclotomicProduct milnor_orlik(const WeightSystem& W) {
  if (W.degrees.size() != 1) throw std::invalid_argument("Milnor-Orlik formula needs one degree");
  if (!W.is_reduced()) throw std::invalid_argument("weight system " + W.str() + " is not reduced");
  const long long d = W.degrees[0];
  std::map<long long, mpq_class> D{{1, 1}};
  for (long long w : W.weights) {
    if (w <= 0) throw std::invalid_argument("weights must be positive");
    long long g = std::gcd(d, w);
    long long u = d / g, v = w / g;
    std::map<long long, mpq_class> fac{{u, mpq_class(mpz_class(1), mpz_class(static_cast<long>(v)))}};
    fac[1] -= 1;
    std::map<long long, mpq_class> N;
    for (const auto& [a, ca] : D)
      for (const auto& [b, cb] : fac) {
        if (cb == 0) continue;
        long long ga = std::gcd(a, b);
        N[a / ga * b] += ca * cb * static_cast<long>(ga);
      }
    D.clear();
    for (auto& [k, c] : N)
      if (c != 0) D[k] = c;
  }
  const int sign = W.weights.size() % 2 == 1 ? 1 : -1;
  CyclotomicProduct out;
  for (auto& [k, c] : D) {
    c.canonicalize();
    if (c.get_den() != 1) throw std::logic_error("non-integral Milnor-Orlik exponent");
    out.multiply_factor(k, sign * c.get_num().get_si());
  }
  return out;
}

std::vector<SparsePoly> calibration_suite() {
  const char* src[] = {
      "x^2+y^3+z^7",     "x^2+y^3+z^5",       "x^3+y^3+z^3",     "x^2+y^4+z^5",
      "x^2+y^2+z^2",     "x^4+y^4+z^4",       "x^2*y+y^3+z^4",   "x^3+x*y^4+y*z^5",
      "x^3*y+y^3*x+z^2", "x^2*y+y^2*z+z^3",   "x^2*y+y^2*z+z^2*x", "x^3*y+y^3*z+z^3*x",
      "x^2*y+y^3*z+z^4*x", "x^2+x*y^3+z^3"};
  std::vector<SparsePoly> out;
  for (const char* s : src) out.push_back(parse_poly(s, xyz_vars()));
  return out;
}

namespace {

struct FaceTerm {
  int subspace_dim;
  long long value, volume;
};

std::vector<FaceTerm> face_terms(const SparsePoly& h) {
  if (h.nvars() != 3) throw std::invalid_argument("zeta at infinity expects three variables");
  auto sup = h.support();
  std::vector<FaceTerm> out;
  for (int mask = 1; mask < 8; ++mask) {
    std::vector<int> I;
    for (int i = 0; i < 3; ++i)
      if (mask >> i & 1) I.push_back(i);
    const int r = static_cast<int>(I.size());
    std::vector<Exps> pts;
    for (const auto& q : sup) {
      bool inside = true;
      for (int j = 0; j < 3; ++j)
        if (!(mask >> j & 1) && q[j] != 0) inside = false;
      if (!inside) continue;
      Exps p;
      for (int i : I) p.push_back(q[i]);
      pts.push_back(p);
    }
    pts.push_back(Exps(r, 0));
    IntMatrix M;
    for (const auto& p : pts) M.push_back(std::vector<long long>(p.begin(), p.end()));
    if (rank(M) < r) continue;
    for (const auto& f : full_dimensional_facets(pts, r))
      if (f.value > 0) out.push_back({r, f.value, f.volume});
  }
  return out;
}

CyclotomicProduct assemble(const std::vector<FaceTerm>& terms, const ZetaConvention& conv,
                           bool reduced) {
  CyclotomicProduct z;
  for (const auto& t : terms) z.multiply_factor(t.value, conv.epsilon[t.subspace_dim - 1] * t.volume);
  if (reduced) z.multiply_factor(1, -1);
  return z;
}

CyclotomicProduct reduced_milnor_orlik(const SparsePoly& p) {
  IntMatrix E;
  for (const auto& e : p.support()) E.push_back(std::vector<long long>(e.begin(), e.end()));
  auto W = reduce_weights(canonical_weights(E)).first;
  return milnor_orlik(W);
}

}  // namespace

ZetaConvention calibrate_zeta(const std::vector<SparsePoly>& suite) {
  std::vector<std::pair<std::vector<FaceTerm>, CyclotomicProduct>> cases;
  for (const auto& p : suite) cases.emplace_back(face_terms(p), reduced_milnor_orlik(p));
  std::vector<ZetaConvention> ok;
  for (int s = 0; s < 8; ++s) {
    ZetaConvention c;
    for (int i = 0; i < 3; ++i) c.epsilon[i] = (s >> i & 1) ? -1 : 1;
    bool all = std::all_of(cases.begin(), cases.end(), [&](const auto& cs) {
      return assemble(cs.first, c, true) == cs.second;
    });
    if (all) ok.push_back(c);
  }
  if (ok.size() != 1)
    throw CalibrationError(std::to_string(ok.size()) +
                           " sign schedules reproduce the Milnor-Orlik oracle, expected exactly one");
  return ok[0];
}

const ZetaConvention& frozen_convention() {
  static const ZetaConvention conv = calibrate_zeta(calibration_suite());
  return conv;
}

CyclotomicProduct zeta_infinity(const SparsePoly& h, bool reduced, const ZetaConvention& conv) {
  if (!conv.calibrated()) throw CalibrationError("zeta convention has not been calibrated");
  return assemble(face_terms(h), conv, reduced);
}

CyclotomicProduct zeta_infinity(const SparsePoly& h, bool reduced) {
  return zeta_infinity(h, reduced, frozen_convention());
}

bool newton_nondegenerate_certified(const SparsePoly& h) {
  auto np = newton_polygon_at_infinity(h);
  if (np.dimension != static_cast<int>(h.nvars())) return false;
  const Exps origin(h.nvars(), 0);
  std::set<std::set<Exps>> faces;
  for (const auto& f : np.facets) faces.insert(std::set<Exps>(f.points.begin(), f.points.end()));
  std::vector<std::set<Exps>> frontier(faces.begin(), faces.end());
  while (!frontier.empty()) {
    std::vector<std::set<Exps>> next;
    for (const auto& a : frontier)
      for (const auto& f : np.facets) {
        std::set<Exps> c;
        for (const auto& e : f.points)
          if (a.count(e)) c.insert(e);
        if (!c.empty() && faces.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  for (const auto& face : faces) {
    if (face.count(origin)) continue;
    std::vector<Exps> pts(face.begin(), face.end());
    IntMatrix D;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      std::vector<long long> row;
      for (std::size_t c = 0; c < pts[i].size(); ++c) row.push_back(pts[i][c] - pts[0][c]);
      D.push_back(row);
    }
    if (!D.empty() && rank(D) != static_cast<int>(D.size())) return false;
  }
  return true;
}

nlohmann::json ZetaReport::to_json() const {
  return {{"family", family.str()},
          {"zeta_reduced", zeta_reduced.to_json()},
          {"poincare", poincare.to_json()},
          {"orbit", orbit.to_json()},
          {"rhs", rhs.to_json()},
          {"milnor_number", zeta_reduced.degree()},
          {"nondegenerate_certified", nondegenerate_certified},
          {"pass", pass}};
}

ZetaReport verify_zeta_identity(const FamilyDescriptor& fam) {
  ZetaReport r;
  r.family = fam;
  auto h = build_virtual(fam);
  r.zeta_reduced = zeta_infinity(h, true);
  r.poincare = poincare_series(build_dual_pair(fam).weights);
  r.orbit = orbit_polynomial(dolgachev_icis(fam));
  r.rhs = r.poincare * r.orbit;
  r.pass = r.zeta_reduced == r.rhs;
  r.nondegenerate_certified = newton_nondegenerate_certified(h);
  return r;
}

}  // namespace sdual
