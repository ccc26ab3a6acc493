#include "sdual/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "sdual/newton.hpp"
#include "sdual/tables.hpp"
#include "sdual/univariate.hpp"

namespace sdual {

namespace {

std::vector<bool> mask_of(const std::vector<int>& S, std::size_t n) {
  std::vector<bool> keep(n, false);
  for (int i : S) keep[i] = true;
  return keep;
}

long long gcd_of(const std::vector<long long>& w, const std::vector<int>& S) {
  long long g = 0;
  for (int i : S) g = std::gcd(g, w[i]);
  return g;
}

long long gcd_all(const std::vector<long long>& w) {
  long long g = 0;
  for (long long v : w) g = std::gcd(g, v);
  return g;
}

// Sets variable u to 1 in a polynomial supported on the stratum {u, v}.
UniPoly dehomogenize(const SparsePoly& p, int u, int v) {
  SparsePoly q(p.variables());
  for (const auto& [e, c] : p.terms()) {
    Exps f = e;
    f[u] = 0;
    q.add_term(f, c);
  }
  return UniPoly::from_sparse(q, static_cast<std::size_t>(v));
}

std::vector<std::vector<int>> subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<bool> sel(n, false);
  std::fill(sel.begin(), sel.begin() + r, true);
  do {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (sel[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return out;
}

std::string describe(const std::vector<SparsePoly>& polys, const std::vector<int>& S) {
  const auto& vars = polys[0].variables();
  std::string zeros;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (std::find(S.begin(), S.end(), static_cast<int>(i)) == S.end())
      zeros += (zeros.empty() ? "" : "=") + vars[i];
  std::string out = zeros.empty() ? "" : zeros + "=0";
  auto keep = mask_of(S, vars.size());
  for (const auto& p : polys) {
    SparsePoly r = p.restrict_to(keep);
    if (!r.is_zero()) out += (out.empty() ? "" : ", ") + r.str() + "=0";
  }
  return out;
}

}  // namespace

nlohmann::json OrbitRecord::to_json() const {
  return {{"stratum", stratum},
          {"description", description},
          {"isotropy_order", isotropy_order},
          {"count", count},
          {"principal", principal}};
}

StratumCount count_stratum_orbits(const std::vector<SparsePoly>& polys,
                                  const std::vector<int>& S,
                                  const std::vector<long long>& w) {
  using K = StratumCount::Kind;
  std::size_t n = polys.at(0).nvars();
  auto keep = mask_of(S, n);
  std::vector<SparsePoly> rest;
  IntMatrix binomials;
  bool other = false;
  for (const auto& p : polys) {
    SparsePoly r = p.restrict_to(keep);
    if (r.is_zero()) continue;
    if (r.size() == 1) return {K::Finite, 0};
    if (r.size() == 2) {
      auto sup = r.support();
      std::vector<long long> row;
      for (int i : S) row.push_back(sup[0][i] - sup[1][i]);
      binomials.push_back(row);
    } else {
      other = true;
    }
    rest.push_back(r);
  }
  if (other) {
    if (S.size() != 2) return {K::Unsolved, 0};
    int u = S[0], v = S[1];
    UniPoly g = dehomogenize(rest[0], u, v);
    for (std::size_t i = 1; i < rest.size(); ++i) g = gcd(g, dehomogenize(rest[i], u, v));
    long long roots = distinct_nonzero_roots(g);
    long long num = roots * std::gcd(w[u], w[v]);
    if (num % w[u] != 0) return {K::Unsolved, 0};
    return {K::Finite, num / w[u]};
  }
  if (binomials.empty()) {
    if (S.size() > 1) return {K::Infinite, 0};
    return {K::Finite, 1};
  }
  int r = rank(binomials);
  if (r != static_cast<int>(S.size()) - 1) return {K::Infinite, 0};
  auto snf = smith_normal_form(binomials);
  long long prod = 1;
  for (int i = 0; i < r; ++i) prod *= snf.D[i][i];
  return {K::Finite, prod};
}

std::vector<long long> SurfaceOrbits::principal_orders() const {
  std::vector<long long> out;
  for (const auto& o : orbits)
    if (o.principal)
      for (long long k = 0; k < o.count; ++k) out.push_back(o.isotropy_order);
  return out;
}

SurfaceOrbits analyse_surface_orbits(const SparsePoly& h, const WeightSystem& W) {
  const auto& w = W.weights;
  std::size_t n = h.nvars();
  SurfaceOrbits res;
  std::vector<int> hyperplanes;
  auto sup = h.support();
  for (std::size_t k = 0; k < n; ++k)
    if (std::all_of(sup.begin(), sup.end(), [&](const Exps& e) { return e[k] > 0; }))
      hyperplanes.push_back(static_cast<int>(k));
  std::vector<SparsePoly> grads;
  for (std::size_t k = 0; k < n; ++k) grads.push_back(h.derivative(k));

  for (int r = 1; r < static_cast<int>(n); ++r)
    for (const auto& S : subsets(static_cast<int>(n), r)) {
      bool covers = std::all_of(hyperplanes.begin(), hyperplanes.end(), [&](int k) {
        return std::find(S.begin(), S.end(), k) != S.end();
      });
      if (!covers) continue;
      StratumCount c = count_stratum_orbits({h}, S, w);
      if (c.kind != StratumCount::Kind::Finite) {
        res.unsolved = true;
        continue;
      }
      if (c.count == 0) continue;
      auto keep = mask_of(S, n);
      if (hyperplanes.empty() && r == 1) {
        bool singular = std::all_of(grads.begin(), grads.end(), [&](const SparsePoly& g) {
          return g.restrict_to(keep).is_zero();
        });
        if (singular) continue;
      }
      if (hyperplanes.empty() && r == 2) {
        UniPoly g = dehomogenize(h.restrict_to(keep), S[0], S[1]);
        for (const auto& gr : grads) {
          SparsePoly gk = gr.restrict_to(keep);
          g = gcd(g, dehomogenize(gk, S[0], S[1]));
        }
        if (!g.is_zero() && g.degree() > 0) res.singular_orbit = true;
      }
      OrbitRecord rec;
      rec.stratum = S;
      rec.description = describe({h}, S);
      rec.isotropy_order = gcd_of(w, S);
      rec.count = c.count;
      rec.principal = true;
      res.orbits.push_back(rec);
    }
  return res;
}

std::vector<OrbitRecord> exceptional_orbits_surface(const SparsePoly& h, const WeightSystem& W) {
  long long d = 0;
  if (!h.is_weighted_homogeneous(W.weights, &d))
    throw InvariantError("polynomial is not homogeneous for " + W.str());
  auto res = analyse_surface_orbits(h, W);
  if (res.unsolved) throw InvariantError("orbit strata outside the solvable fragment");
  if (res.singular_orbit) throw InvariantError("singular orbit off the coordinate axes");
  auto orders = res.principal_orders();
  if (orders.size() != 2)
    throw InvariantError("expected two principal orbits, found " + std::to_string(orders.size()));
  for (long long o : orders)
    if (o == 1) throw InvariantError("principal orbit with trivial isotropy");
  return res.orbits;
}

std::vector<long long> IcisOrbits::orders() const {
  std::vector<long long> out;
  for (const auto& o : orbits)
    for (long long k = 0; k < o.count; ++k) out.push_back(o.isotropy_order);
  return out;
}

IcisOrbits analyse_icis_orbits(const SparsePoly& f1, const SparsePoly& f2,
                               const WeightSystem& W) {
  const auto& w = W.weights;
  int n = static_cast<int>(f1.nvars());
  long long gen = gcd_all(w);
  IcisOrbits res;
  for (int r = 1; r < n; ++r)
    for (const auto& S : subsets(n, r)) {
      StratumCount c = count_stratum_orbits({f1, f2}, S, w);
      long long iso = gcd_of(w, S);
      if (c.kind != StratumCount::Kind::Finite) {
        if (c.kind == StratumCount::Kind::Unsolved || iso > gen) res.unsolved = true;
        continue;
      }
      if (c.count == 0 || iso <= gen) continue;
      OrbitRecord rec;
      rec.stratum = S;
      rec.description = describe({f1, f2}, S);
      rec.isotropy_order = iso;
      rec.count = c.count;
      rec.principal = true;
      res.orbits.push_back(rec);
    }
  return res;
}

std::vector<long long> dolgachev_virtual(const FamilyDescriptor& fam, bool* fallback) {
  if (fallback) *fallback = false;
  try {
    auto vs = virtual_split(fam);
    auto a = analyse_surface_orbits(vs.h1, vs.w1);
    auto b = analyse_surface_orbits(vs.h2, vs.w2);
    auto oa = a.principal_orders(), ob = b.principal_orders();
    bool clean = !a.unsolved && !b.unsolved && !a.singular_orbit && !b.singular_orbit;
    if (clean && oa.size() == 2 && ob.size() == 2) return {oa[0], oa[1], ob[0], ob[1]};
  } catch (const SplitError&) {
  } catch (const std::invalid_argument&) {
  }
  if (fallback) *fallback = true;
  return closed_dolgachev_h(fam);
}

std::vector<long long> dolgachev_icis(const FamilyDescriptor& fam, bool* fallback) {
  if (fallback) *fallback = false;
  try {
    DualPair dp = build_dual_pair(fam);
    auto res = analyse_icis_orbits(dp.f1, dp.f2, dp.weights);
    auto o = res.orders();
    if (!res.unsolved && o.size() == 3) return o;
  } catch (const std::invalid_argument&) {
  }
  if (fallback) *fallback = true;
  return closed_dolgachev_f(fam);
}

std::vector<long long> gabrielov_virtual(const FamilyDescriptor& fam) {
  validate(fam);
  return closed_gabrielov_h(fam);
}

std::vector<long long> gabrielov_icis(const FamilyDescriptor& fam) {
  validate(fam);
  return closed_gabrielov_f(fam);
}

bool multiset_equal(std::vector<long long> a, std::vector<long long> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool grouped_equal(const std::vector<long long>& a, const std::vector<long long>& b) {
  if (a.size() != 4 || b.size() != 4) return false;
  auto pair = [](long long x, long long y) { return std::make_pair(std::min(x, y), std::max(x, y)); };
  auto a1 = pair(a[0], a[1]), a2 = pair(a[2], a[3]);
  auto b1 = pair(b[0], b[1]), b2 = pair(b[2], b[3]);
  return (a1 == b1 && a2 == b2) || (a1 == b2 && a2 == b1);
}

std::string format_tuple(const std::vector<long long>& v, bool grouped) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += (grouped && i == 2) ? ";" : ",";
    s += std::to_string(v[i]);
  }
  return s;
}

nlohmann::json DualityReport::to_json() const {
  return {{"family", family.to_json()},
          {"dol_virtual", format_tuple(dol_virtual, true)},
          {"gab_virtual", format_tuple(gab_virtual, false)},
          {"dol_icis", format_tuple(dol_icis, false)},
          {"gab_icis", format_tuple(gab_icis, true)},
          {"closed_forms_match", closed_forms_match},
          {"fallback", fallback},
          {"duality_pass", pass()}};
}

DualityReport verify_strange_duality(const FamilyDescriptor& fam) {
  DualityReport r;
  r.family = fam;
  bool fb1 = false, fb2 = false;
  r.dol_virtual = dolgachev_virtual(fam, &fb1);
  r.dol_icis = dolgachev_icis(fam, &fb2);
  r.gab_virtual = gabrielov_virtual(fam);
  r.gab_icis = gabrielov_icis(fam);
  r.fallback = fb1 || fb2;
  r.gab_h_matches_dol_icis = multiset_equal(r.gab_virtual, r.dol_icis);
  r.gab_icis_matches_dol_h = grouped_equal(r.gab_icis, r.dol_virtual);
  r.closed_forms_match = (fb1 || grouped_equal(r.dol_virtual, closed_dolgachev_h(fam))) &&
                         (fb2 || multiset_equal(r.dol_icis, closed_dolgachev_f(fam)));
  return r;
}

RegimeReport regime_check(const FamilyDescriptor& fam) {
  RegimeReport rep;
  if (!is_virtual(fam)) {
    rep.reason = "not a virtual family";
    return rep;
  }
  try {
    auto vs = virtual_split(fam);
    if (!vs.reference_matched || vs.w2 != reduced_weights(fam)) {
      rep.reason = "no top face carries the reduced weights of f";
      return rep;
    }
    if (!vs.w1.is_reduced() || !vs.w2.is_reduced()) {
      rep.reason = "a top face has non-reduced weights";
      return rep;
    }
    for (const auto* face : {&vs.h1, &vs.h2}) {
      const WeightSystem& W = face == &vs.h1 ? vs.w1 : vs.w2;
      auto o = analyse_surface_orbits(*face, W);
      if (o.unsolved || o.singular_orbit || o.principal_orders().size() != 2) {
        rep.reason = "top face " + face->str() + " does not have exactly two principal orbits";
        return rep;
      }
    }
    DualPair dp = build_dual_pair(fam);
    if (!dp.degree_normalised || dp.weights.degrees[0] != vs.w1.degrees[0]) {
      rep.reason = "degrees of the dual pair differ from those of h1, h2";
      return rep;
    }
    auto ic = analyse_icis_orbits(dp.f1, dp.f2, dp.weights);
    if (ic.unsolved || ic.orders().size() != 3) {
      rep.reason = "complete intersection has " + std::to_string(ic.orders().size()) +
                   " isotropic points";
      return rep;
    }
  } catch (const std::exception& e) {
    rep.reason = e.what();
    return rep;
  }
  rep.ok = true;
  return rep;
}

bool in_regime(const FamilyDescriptor& fam) { return regime_check(fam).ok; }

}  // namespace sdual
