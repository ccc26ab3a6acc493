#include "sdual/families.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sdual/invariants.hpp"
#include "sdual/newton.hpp"

namespace sdual {

namespace {

using P3 = std::array<long long, 3>;

struct TypeInfo {
  FamilyType type;
  const char* name;
};

constexpr TypeInfo kTypes[] = {
    {FamilyType::I, "I"},     {FamilyType::IIA, "IIA"}, {FamilyType::IIB, "IIB"},
    {FamilyType::IIBs, "IIB#"}, {FamilyType::III, "III"}, {FamilyType::IV, "IV"},
    {FamilyType::IV1, "IV1"}, {FamilyType::IV2, "IV2"}, {FamilyType::IV2s, "IV2#"}};

bool divides(long long a, long long b) { return a != 0 && b % a == 0; }
bool even(long long a) { return a % 2 == 0; }

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

// Base-type constraints, without the grading index.
std::string shape_problem(FamilyType base, const P3& p) {
  auto [p1, p2, p3] = p;
  if (p1 < 1 || p2 < 1 || p3 < 1) return "parameters must be positive";
  switch (base) {
    case FamilyType::I:
      if (!even(p1) || !even(p2)) return "p1 and p2 must be even";
      if (p1 < p2 || p2 < 2) return "need p1 >= p2 >= 2";
      if (p3 < 2) return "need p3 >= 2";
      return "";
    case FamilyType::IIA:
      if (even(p2) || p2 < 3) return "p2 must be odd and >= 3";
      if (!divides(p2, p3) || !even(p3 / p2)) return "p3/p2 must be an even integer";
      if (p1 < 2) return "need p1 >= 2";
      return "";
    case FamilyType::IIB:
      if (!even(p1) || !even(p2)) return "p1 and p2 must be even";
      if (p1 < 2 || p2 < 2) return "need p1, p2 >= 2";
      if (!divides(p2, p3) || p3 / p2 < 2) return "p3/p2 must be an integer >= 2";
      return "";
    case FamilyType::III:
      if (!even(p2) || !even(p3)) return "q2 and q3 must be even";
      if (p2 < 2 || p3 < p2) return "need 2 <= q2 <= q3";
      if (p1 < 2) return "need p1 >= 2";
      return "";
    case FamilyType::IV:
      if (even(p1) || p1 < 3) return "p1 must be odd and >= 3";
      if (!divides(p1, p2) || !even(p2 / p1)) return "p2/p1 must be an even integer";
      if (!divides(p2, p3) || p3 / p2 < 2) return "p3/p2 must be an integer >= 2";
      return "";
    default:
      return "not a base type";
  }
}

IntMatrix base_rows(FamilyType base, const P3& p) {
  auto [p1, p2, p3] = p;
  switch (base) {
    case FamilyType::I:
      return {{p1, 0, 0}, {0, p2, 0}, {0, 0, p3}};
    case FamilyType::IIA:
      return {{p2, 0, 0}, {1, p3 / p2, 0}, {0, 0, p1}};
    case FamilyType::IIB:
      return {{p1, 0, 0}, {0, p2, 0}, {0, 1, p3 / p2}};
    case FamilyType::III:
      return {{p2 + 1, 1, 0}, {1, p3 + 1, 0}, {0, 0, p1}};
    default:
      return {{p1, 0, 0}, {1, p2 / p1, 0}, {0, 1, p3 / p2}};
  }
}

// The extra monomial of the non-sharp extension.
std::vector<long long> extra_row(FamilyType base, const P3& p) {
  auto [p1, p2, p3] = p;
  switch (base) {
    case FamilyType::I:
    case FamilyType::IIB:
      return {p1 / 2, p2 / 2, 0};
    case FamilyType::IIA:
      return {(p2 + 1) / 2, p3 / (2 * p2), 0};
    case FamilyType::III:
      return {p2 / 2 + 1, p3 / 2 + 1, 0};
    default:
      return {(p1 + 1) / 2, p2 / (2 * p1), 0};
  }
}

std::vector<long long> sharp_row(FamilyType base, const P3& p) {
  auto [p1, p2, p3] = p;
  if (base == FamilyType::IIB) return {p1 / 2, 0, p3 / 2};
  return {(p1 - 1) / 2, 0, p3 / p2};
}

bool sharp_possible(FamilyType base, const P3& p) {
  if (base == FamilyType::IIB) return p[1] == 2;
  if (base == FamilyType::IV) return p[1] == 2 * p[0];
  return false;
}

bool tag_condition(FamilyType t, const P3& p) {
  switch (t) {
    case FamilyType::IIA:
      return p[1] == 3;
    case FamilyType::IIB:
    case FamilyType::IIBs:
      return p[1] == 2;
    case FamilyType::III:
      return p[1] == 2;
    case FamilyType::IV1:
      return p[0] == 3 && p[1] != 2 * p[0];
    case FamilyType::IV2:
    case FamilyType::IV2s:
      return p[1] == 2 * p[0];
    default:
      return false;
  }
}

Exps to_exps(const std::vector<long long>& v) { return Exps(v.begin(), v.end()); }

SparsePoly from_rows(const IntMatrix& rows, const std::vector<long long>& coeffs,
                     const std::vector<std::string>& vars) {
  SparsePoly p(vars);
  for (std::size_t i = 0; i < rows.size(); ++i)
    p.add_term(to_exps(rows[i]), mpq_class(static_cast<long>(coeffs[i])));
  return p;
}

long long minors_gcd3(const IntMatrix& M) {
  long long g = 0;
  std::size_t r = M.size(), c = M[0].size();
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b)
      for (std::size_t d = b + 1; d < r; ++d)
        for (std::size_t i = 0; i < c; ++i)
          for (std::size_t j = i + 1; j < c; ++j)
            for (std::size_t k = j + 1; k < c; ++k) {
              IntMatrix s = {{M[a][i], M[a][j], M[a][k]},
                             {M[b][i], M[b][j], M[b][k]},
                             {M[d][i], M[d][j], M[d][k]}};
              g = std::gcd(g, std::llabs(det(s)));
            }
  return g;
}

std::vector<FamilyDescriptor> match_shapes(const IntMatrix& M, bool require_index) {
  std::vector<FamilyDescriptor> out;
  auto add = [&](FamilyType t, long long a, long long b, long long c) {
    FamilyDescriptor f{t, {a, b, c}, ""};
    if (require_index ? is_valid(f) : shape_problem(t, f.params).empty()) out.push_back(f);
  };
  const auto& r0 = M[0];
  const auto& r1 = M[1];
  const auto& r2 = M[2];
  auto zero = [](long long v) { return v == 0; };
  if (zero(r0[1]) && zero(r0[2]) && zero(r1[0]) && zero(r1[2]) && zero(r2[0]) && zero(r2[1]))
    add(FamilyType::I, r0[0], r1[1], r2[2]);
  if (zero(r0[1]) && zero(r0[2]) && r1[0] == 1 && zero(r1[2]) && zero(r2[0]) && zero(r2[1]))
    add(FamilyType::IIA, r2[2], r0[0], r0[0] * r1[1]);
  if (zero(r0[1]) && zero(r0[2]) && zero(r1[0]) && zero(r1[2]) && zero(r2[0]) && r2[1] == 1)
    add(FamilyType::IIB, r0[0], r1[1], r1[1] * r2[2]);
  if (r0[1] == 1 && zero(r0[2]) && r1[0] == 1 && zero(r1[2]) && zero(r2[0]) && zero(r2[1]))
    add(FamilyType::III, r2[2], r0[0] - 1, r1[1] - 1);
  if (zero(r0[1]) && zero(r0[2]) && r1[0] == 1 && zero(r1[2]) && zero(r2[0]) && r2[1] == 1)
    add(FamilyType::IV, r0[0], r0[0] * r1[1], r0[0] * r1[1] * r2[2]);
  return out;
}

// Rewrites x^a y^b z^c w^e in the invariants of the C*-action with kernel k.
SparsePoly rewrite_monomial(const std::vector<long long>& k, long long a, long long b, long long c,
                            long long e) {
  const auto& V = XYZW_vars();
  if (k == std::vector<long long>{1, 1, 0, -2}) {
    long long l = a % 2;
    long long i = (a - l) / 2, j = (b - l) / 2;
    if ((b - l) % 2 != 0 || i < 0 || j < 0 || i + j + l != e)
      throw InvalidFamily("monomial outside the invariant subring");
    return SparsePoly::monomial(V, {int(i), int(j), int(c), int(l)});
  }
  if (k == std::vector<long long>{1, 1, -1, -1}) {
    long long k0 = std::max(0LL, c - b);
    long long i = a - k0, j = c - k0, l = b - c + k0;
    if (i < 0 || j < 0 || l < 0 || i + l != e)
      throw InvalidFamily("monomial outside the invariant subring");
    return SparsePoly::monomial(V, {int(i), int(j), int(k0), int(l)});
  }
  throw InvalidFamily("unexpected kernel of the extended matrix");
}

}  // namespace

std::string type_name(FamilyType t) {
  for (const auto& ti : kTypes)
    if (ti.type == t) return ti.name;
  return "?";
}

FamilyType parse_type(const std::string& s) {
  std::string t = trim(s);
  const std::string sharp = "♯";
  auto pos = t.find(sharp);
  if (pos != std::string::npos) t.replace(pos, sharp.size(), "#");
  for (const auto& ti : kTypes)
    if (t == ti.name) return ti.type;
  throw InvalidFamily("unknown family type '" + s + "'");
}

FamilyType base_type(FamilyType t) {
  switch (t) {
    case FamilyType::IIBs:
      return FamilyType::IIB;
    case FamilyType::IV1:
    case FamilyType::IV2:
    case FamilyType::IV2s:
      return FamilyType::IV;
    default:
      return t;
  }
}

bool is_virtual_type(FamilyType t) { return t != FamilyType::I && t != FamilyType::IV; }

bool is_sharp_type(FamilyType t) { return t == FamilyType::IIBs || t == FamilyType::IV2s; }

std::string FamilyDescriptor::str() const {
  std::ostringstream os;
  os << type_name(type) << " (" << params[0] << "," << params[1] << "," << params[2] << ")";
  return os.str();
}

nlohmann::json FamilyDescriptor::to_json() const {
  nlohmann::json j{{"type", type_name(type)}, {"params", params}};
  if (!name.empty()) j["name"] = name;
  return j;
}

FamilyDescriptor FamilyDescriptor::from_json(const nlohmann::json& j) {
  try {
    FamilyDescriptor f;
    f.type = parse_type(j.at("type").get<std::string>());
    const auto& ps = j.at("params");
    if (!ps.is_array() || ps.size() != 3) throw InvalidFamily("params must have three entries");
    for (int i = 0; i < 3; ++i) f.params[i] = ps[i].get<long long>();
    if (j.contains("name")) f.name = j["name"].get<std::string>();
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidFamily(std::string("malformed descriptor: ") + e.what());
  }
}

FamilyDescriptor FamilyDescriptor::parse(const std::string& text) {
  std::string s = trim(text);
  auto cut = s.find_first_of(" (\t");
  if (cut == std::string::npos) throw InvalidFamily("descriptor needs a type and three parameters");
  FamilyDescriptor f;
  f.type = parse_type(s.substr(0, cut));
  std::string rest = s.substr(cut);
  for (char& c : rest)
    if (c == '(' || c == ')' || c == ',') c = ' ';
  std::istringstream is(rest);
  std::vector<long long> vals;
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      vals.push_back(v);
    } catch (const std::exception&) {
      throw InvalidFamily("bad parameter '" + tok + "'");
    }
  }
  if (vals.size() != 3) throw InvalidFamily("descriptor needs exactly three parameters");
  for (int i = 0; i < 3; ++i) f.params[i] = vals[i];
  return f;
}

void validate(const FamilyDescriptor& fam) {
  FamilyType b = base_type(fam.type);
  std::string why = shape_problem(b, fam.params);
  if (!why.empty()) throw InvalidFamily(fam.str() + ": " + why);
  long long idx = grading_index(base_rows(b, fam.params));
  if (idx != 2)
    throw InvalidFamily(fam.str() + ": grading index is " + std::to_string(idx) + ", not 2");
  if (b != fam.type && !tag_condition(fam.type, fam.params))
    throw InvalidFamily(fam.str() + ": condition of the " + type_name(fam.type) +
                        " tag does not hold");
}

bool is_valid(const FamilyDescriptor& fam) {
  try {
    validate(fam);
    return true;
  } catch (const InvalidFamily&) {
    return false;
  }
}

bool is_virtual(const FamilyDescriptor& fam) {
  return is_virtual_type(fam.type) && is_valid(fam) && tag_condition(fam.type, fam.params);
}

IntMatrix exponent_matrix(const FamilyDescriptor& fam) {
  validate(fam);
  return base_rows(base_type(fam.type), fam.params);
}

SparsePoly invertible_polynomial(const FamilyDescriptor& fam) {
  return from_rows(exponent_matrix(fam), {1, 1, 1}, xyz_vars());
}

WeightSystem reduced_weights(const FamilyDescriptor& fam) {
  return reduce_weights(canonical_weights(exponent_matrix(fam))).first;
}

long long gorenstein_parameter(const FamilyDescriptor& fam) {
  return gorenstein_parameter(reduced_weights(fam));
}

namespace {

std::vector<FamilyDescriptor> classify_matches(const IntMatrix& E, bool require_index) {
  if (E.size() != 3 || E[0].size() != 3 || E[1].size() != 3 || E[2].size() != 3)
    throw ClassifyError("exponent matrix must be 3x3");
  for (const auto& r : E)
    for (long long v : r)
      if (v < 0) throw ClassifyError("negative exponent");
  if (det(E) == 0) throw ClassifyError("not an invertible polynomial: singular exponent matrix");
  if (require_index) {
    long long idx = grading_index(E);
    if (idx != 2) throw ClassifyError("grading index " + std::to_string(idx) + ", expected 2");
  }
  std::vector<FamilyDescriptor> found;
  std::array<int, 3> cols{0, 1, 2};
  do {
    std::array<int, 3> rows{0, 1, 2};
    do {
      IntMatrix M(3, std::vector<long long>(3));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) M[i][j] = E[rows[i]][cols[j]];
      for (auto& f : match_shapes(M, require_index)) found.push_back(f);
    } while (std::next_permutation(rows.begin(), rows.end()));
  } while (std::next_permutation(cols.begin(), cols.end()));
  if (found.empty()) throw ClassifyError("no matching type for this invertible polynomial");
  return found;
}

IntMatrix support_matrix(const SparsePoly& f) {
  if (f.nvars() != 3) throw ClassifyError("expected a polynomial in three variables");
  if (f.size() != 3) throw ClassifyError("an invertible polynomial in three variables has 3 monomials");
  IntMatrix E;
  for (const auto& e : f.support()) E.push_back({e[0], e[1], e[2]});
  return E;
}

}  // namespace

FamilyDescriptor classify_invertible(const IntMatrix& E) {
  auto found = classify_matches(E, true);
  return *std::min_element(found.begin(), found.end());
}

FamilyDescriptor classify_shape(const IntMatrix& E) {
  auto found = classify_matches(E, false);
  return *std::min_element(found.begin(), found.end());
}

FamilyDescriptor classify_shape(const SparsePoly& f) { return classify_shape(support_matrix(f)); }

FamilyDescriptor classify_invertible(const SparsePoly& f) { return classify_invertible(support_matrix(f)); }

IntMatrix extension_matrix(const FamilyDescriptor& fam) {
  FamilyType b = base_type(fam.type);
  std::string why = shape_problem(b, fam.params);
  if (why.empty() && b != fam.type && !tag_condition(fam.type, fam.params))
    why = "condition of the " + type_name(fam.type) + " tag does not hold";
  if (!why.empty()) throw InvalidFamily(fam.str() + ": " + why);
  const auto& p = fam.params;
  if (fam.type == FamilyType::IIBs)
    return {{p[0] / 2, 0, p[2] / 2}, {0, 2, 0}, {0, 1, p[2] / 2}, {p[0] / 2, 1, 0}};
  if (fam.type == FamilyType::IV2s)
    return {{(p[0] - 1) / 2, 0, p[2] / p[1]},
            {1, 2, 0},
            {0, 1, p[2] / p[1]},
            {(p[0] + 1) / 2, 1, 0}};
  IntMatrix E = base_rows(b, p);
  E.push_back(extra_row(b, p));
  return E;
}

SparsePoly build_special_F(const FamilyDescriptor& fam) {
  IntMatrix E = extension_matrix(fam);
  if (is_sharp_type(fam.type)) return from_rows(E, {-1, 1, 1, -1}, xyz_vars());
  return from_rows(E, {1, 1, 1, -2}, xyz_vars());
}

std::vector<Exps> fourth_row_candidates(const FamilyDescriptor& fam) {
  IntMatrix E = exponent_matrix(fam);
  WeightSystem w = reduced_weights(fam);
  long long d = w.degrees[0];
  std::vector<Exps> out;
  for (long long a = 0; a * w.weights[0] <= d; ++a)
    for (long long b = 0; a * w.weights[0] + b * w.weights[1] <= d; ++b) {
      long long rest = d - a * w.weights[0] - b * w.weights[1];
      if (rest % w.weights[2] != 0) continue;
      std::vector<long long> m{a, b, rest / w.weights[2]};
      if (std::find(E.begin(), E.end(), m) != E.end()) continue;
      if (std::count(m.begin(), m.end(), 0) == 2) continue;
      IntMatrix M;
      for (const auto& r : E) M.push_back({r[0], r[1], r[2], -1});
      M.push_back({m[0], m[1], m[2], -1});
      if (rank(M) == 3 && minors_gcd3(M) == 1) out.push_back(to_exps(m));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Exps> expected_fourth_rows(const FamilyDescriptor& fam) {
  validate(fam);
  FamilyType b = base_type(fam.type);
  std::vector<Exps> out{to_exps(extra_row(b, fam.params))};
  if (sharp_possible(b, fam.params)) out.push_back(to_exps(sharp_row(b, fam.params)));
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json DualPair::to_json() const {
  return {{"f1", f1.str()},
          {"f2", f2.str()},
          {"weights", weights.to_json()},
          {"kernel", kernel},
          {"degree_normalised", degree_normalised}};
}

SparsePoly transpose_polynomial(const IntMatrix& E4) {
  SparsePoly p(std::vector<std::string>{"x", "y", "z", "w"});
  for (std::size_t j = 0; j < 3; ++j) {
    Exps e(E4.size());
    for (std::size_t i = 0; i < E4.size(); ++i) e[i] = static_cast<int>(E4[i][j]);
    p.add_term(e, 1);
  }
  return p;
}

DualPair build_dual_pair(const FamilyDescriptor& fam) {
  IntMatrix E = extension_matrix(fam);
  DualPair dp;
  dp.kernel = kernel_primitive(E);
  const auto& V = XYZW_vars();
  bool square = dp.kernel == std::vector<long long>{1, 1, 0, -2};
  dp.f1 = parse_poly(square ? "X*Y-W^2" : "X*Y-Z*W", V);
  dp.f2 = SparsePoly(V);
  for (std::size_t j = 0; j < 3; ++j)
    dp.f2 += rewrite_monomial(dp.kernel, E[0][j], E[1][j], E[2][j], E[3][j]);

  IntMatrix rows;
  auto constrain = [&](const SparsePoly& f, int slot) {
    for (const auto& e : f.support()) {
      std::vector<long long> r{e[0], e[1], e[2], e[3], 0, 0};
      r[4 + slot] = -1;
      rows.push_back(r);
    }
  };
  constrain(dp.f1, 0);
  constrain(dp.f2, 1);
  auto ker = integer_kernel(rows);
  if (ker.size() != 1) throw InvalidFamily("weights of the dual pair are not unique");
  auto v = ker[0];
  long long g = 0;
  for (long long t : v) g = std::gcd(g, std::llabs(t));
  if (v[5] < 0) g = -g;
  for (auto& t : v) t /= g;

  long long target = reduced_weights(fam).degrees[0];
  if (target % v[5] == 0) {
    for (auto& t : v) t *= target / v[5];
  } else {
    dp.degree_normalised = false;
  }
  dp.weights = WeightSystem{{v[0], v[1], v[2], v[3]}, {v[4], v[5]}};
  return dp;
}

std::pair<std::string, SparsePoly> coordinate_change(const FamilyDescriptor& fam) {
  if (!is_virtual(fam)) throw NotVirtual(fam.str() + " is not virtual");
  const auto& p = fam.params;
  const auto& V = xyz_vars();
  auto shift = [&](const char* var, const char* other, long long e) {
    SparsePoly r = SparsePoly::monomial(V, {var[0] == 'x', var[0] == 'y', 0});
    Exps oe{0, 0, 0};
    oe[other[0] - 'x'] = static_cast<int>(e);
    r.add_term(oe, 1);
    return std::make_pair(std::string(var), r);
  };
  switch (fam.type) {
    case FamilyType::IIA:
      return shift("x", "y", p[2] / 6);
    case FamilyType::IIB:
    case FamilyType::IIBs:
      return shift("y", "x", p[0] / 2);
    case FamilyType::III:
      return shift("x", "y", p[2] / 2);
    case FamilyType::IV1:
      return shift("x", "y", p[1] / 6);
    default:
      return shift("y", "x", (p[0] - 1) / 2);
  }
}

SparsePoly transform_special(const FamilyDescriptor& fam, const std::string& var,
                             const SparsePoly& replacement) {
  const auto& V = xyz_vars();
  SparsePoly xyz = SparsePoly::monomial(V, {1, 1, 1});
  SparsePoly G = build_special_F(fam) - xyz;
  return substitute(G, var, replacement) + xyz;
}

SparsePoly build_virtual(const FamilyDescriptor& fam) {
  if (!is_virtual_type(fam.type)) throw NotVirtual(fam.str() + " is not virtual");
  validate(fam);
  auto [var, repl] = coordinate_change(fam);
  SparsePoly h = transform_special(fam, var, repl);
  if (h.size() != 4)
    throw NotVirtual(fam.str() + ": h has " + std::to_string(h.size()) + " monomials");
  return h;
}

VirtualSplit virtual_split(const FamilyDescriptor& fam) {
  SparsePoly h = build_virtual(fam);
  WeightSystem ref = reduced_weights(fam);
  VirtualSplit vs;
  std::pair<SparsePoly, SparsePoly> faces;
  try {
    faces = top_faces_split(h, ref);
  } catch (const SplitError&) {
    faces = top_faces_split(h);
    vs.reference_matched = false;
  }
  vs.h1 = faces.first;
  vs.h2 = faces.second;
  auto weights_of = [&](const SparsePoly& hi) {
    if (hi.size() != 3)
      throw SplitError(fam.str() + ": a top face of h does not have 3 monomials");
    IntMatrix M;
    for (const auto& e : hi.support()) M.push_back({e[0], e[1], e[2]});
    try {
      return canonical_weights(M);
    } catch (const std::invalid_argument& e) {
      throw SplitError(fam.str() + ": " + e.what());
    }
  };
  vs.w1 = weights_of(vs.h1);
  vs.w2 = weights_of(vs.h2);
  return vs;
}

std::pair<WeightSystem, WeightSystem> virtual_weight_systems(const FamilyDescriptor& fam) {
  auto vs = virtual_split(fam);
  return {vs.w1, vs.w2};
}

std::vector<FamilyDescriptor> family_grid(long long bound) {
  std::vector<FamilyDescriptor> out;
  for (FamilyType t : {FamilyType::I, FamilyType::IIA, FamilyType::IIB, FamilyType::III,
                       FamilyType::IV})
    for (long long a = 1; a <= bound; ++a)
      for (long long b = 1; b <= bound; ++b)
        for (long long c = 1; c <= bound; ++c) {
          P3 p{a, b, c};
          if (!shape_problem(t, p).empty()) continue;
          if (grading_index(base_rows(t, p)) != 2) continue;
          out.push_back(FamilyDescriptor{t, p, ""});
        }
  return out;
}

std::vector<FamilyDescriptor> virtual_grid(long long bound) {
  std::vector<FamilyDescriptor> out;
  for (const auto& f : family_grid(bound))
    for (FamilyType t : {FamilyType::IIA, FamilyType::IIB, FamilyType::IIBs, FamilyType::III,
                         FamilyType::IV1, FamilyType::IV2, FamilyType::IV2s}) {
      if (base_type(t) != f.type || !tag_condition(t, f.params)) continue;
      out.push_back(FamilyDescriptor{t, f.params, ""});
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FamilyDescriptor> enumerate_by_gorenstein(long long a, long long bound) {
  std::vector<FamilyDescriptor> out;
  for (const auto& f : virtual_grid(bound)) {
    if (gorenstein_parameter(f) != a) continue;
    if (a >= 0 && !in_regime(f)) continue;
    out.push_back(f);
  }
  return out;
}

}  // namespace sdual
