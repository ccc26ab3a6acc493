#include "sdual/dynkin.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "sdual/fixtures.hpp"

namespace sdual {

namespace {

long long checked_add_mul(long long a, long long c, long long b) {
  long long p, s;
  if (__builtin_mul_overflow(c, b, &p) || __builtin_add_overflow(a, p, &s))
    throw DynkinError("intersection number overflow");
  return s;
}

IntersectionMatrix blank(std::vector<std::string> labels) {
  IntersectionMatrix m;
  const std::size_t n = labels.size();
  m.labels = std::move(labels);
  m.entries.assign(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m.entries[i][i] = -2;
  return m;
}

void set_edge(IntersectionMatrix& m, std::size_t i, std::size_t j, long long w) {
  m.entries[i][j] = w;
  m.entries[j][i] = w;
}

std::string weight_style(long long w) {
  if (w == 1) return "solid";
  if (w == -1) return "dashed";
  if (w == -2) return "double";
  return "bold";
}

std::vector<mpz_class> berkowitz(const std::vector<std::vector<mpz_class>>& A) {
  // Division-free characteristic polynomial; returns coefficients of det(tI - A), leading first.
  const std::size_t n = A.size();
  std::vector<mpz_class> p{1};
  for (std::size_t r = 0; r < n; ++r) {
    // Leading principal (r+1)x(r+1) submatrix split as [[R, c]; [s, a]].
    std::vector<mpz_class> col(r), row(r);
    for (std::size_t i = 0; i < r; ++i) {
      col[i] = A[i][r];
      row[i] = A[r][i];
    }
    const mpz_class a = A[r][r];
    std::vector<mpz_class> q(r + 2);
    q[0] = 1;
    q[1] = -a;
    std::vector<mpz_class> v = col;
    for (std::size_t k = 2; k <= r + 1; ++k) {
      mpz_class s = 0;
      for (std::size_t i = 0; i < r; ++i) s += row[i] * v[i];
      q[k] = -s;
      std::vector<mpz_class> nv(r, 0);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) nv[i] += A[i][j] * v[j];
      v = std::move(nv);
    }
    std::vector<mpz_class> np(r + 2, 0);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < p.size() && i + j < np.size(); ++j) np[i + j] += q[i] * p[j];
    p = std::move(np);
  }
  return p;
}

std::vector<std::vector<mpz_class>> to_mpz(const IntMatrix& m) {
  std::vector<std::vector<mpz_class>> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (long long v : m[i]) out[i].emplace_back(static_cast<long>(v));
  return out;
}

long long to_ll(const mpz_class& z) {
  if (!z.fits_slong_p()) throw DynkinError("integer invariant does not fit in 64 bits");
  return z.get_si();
}

// Fraction-free elimination; returns (rank, determinant when full rank).
std::pair<int, mpz_class> bareiss(std::vector<std::vector<mpz_class>> A) {
  const std::size_t n = A.size();
  mpz_class prev = 1;
  int rank = 0;
  int sign = 1;
  std::size_t row = 0;
  const std::size_t cols = n ? A[0].size() : 0;
  for (std::size_t c = 0; c < cols && row < n; ++c) {
    std::size_t piv = row;
    while (piv < n && A[piv][c] == 0) ++piv;
    if (piv == n) continue;
    if (piv != row) {
      std::swap(A[piv], A[row]);
      sign = -sign;
    }
    for (std::size_t i = row + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        A[i][j] = (A[i][j] * A[row][c] - A[i][c] * A[row][j]);
        mpz_divexact(A[i][j].get_mpz_t(), A[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      A[i][c] = 0;
    }
    prev = A[row][c];
    ++row;
    ++rank;
  }
  mpz_class det = rank == static_cast<int>(n) && n > 0 ? mpz_class(sign) * prev : mpz_class(0);
  if (n == 0) det = 1;
  return {rank, det};
}

}  // namespace

void IntersectionMatrix::check() const {
  const std::size_t n = labels.size();
  if (entries.size() != n) throw DynkinError("label count does not match the matrix size");
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i].size() != n) throw DynkinError("intersection matrix is not square");
    if (entries[i][i] != -2) throw DynkinError("diagonal entry is not -2");
    for (std::size_t j = 0; j < i; ++j)
      if (entries[i][j] != entries[j][i]) throw DynkinError("intersection matrix is not symmetric");
  }
}

nlohmann::json IntersectionMatrix::to_json() const {
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (entries[i][j] != 0)
        edges.push_back({{"from", labels[i]},
                         {"to", labels[j]},
                         {"i", i + 1},
                         {"j", j + 1},
                         {"weight", entries[i][j]},
                         {"style", weight_style(entries[i][j])}});
  return {{"size", size()}, {"labels", labels}, {"matrix", entries}, {"edges", edges}};
}

std::string IntersectionMatrix::to_dot(const std::string& name) const {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n  node [shape=circle, label=\"\", xlabel=\"\"];\n";
  for (std::size_t i = 0; i < size(); ++i)
    os << "  v" << i + 1 << " [xlabel=\"" << labels[i] << "\"];\n";
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j) {
      long long w = entries[i][j];
      if (w == 0) continue;
      os << "  v" << i + 1 << " -- v" << j + 1 << " [weight=" << w;
      const std::string st = weight_style(w);
      if (st == "double")
        os << ", color=\"black:invis:black\"";
      else if (st == "bold")
        os << ", style=bold, label=\"" << w << "\"";
      else
        os << ", style=" << st;
      os << "];\n";
    }
  os << "}\n";
  return os.str();
}

nlohmann::json EdgeConvention::to_json() const {
  return {{"plain", plain}, {"double", dbl}, {"dashed", dashed}};
}

EdgeConvention default_edge_convention() {
  EdgeConvention c;
  const auto& w = active_fixtures().table("edge_weights");
  c.plain = w.at("plain").get<long long>();
  c.dbl = w.at("double").get<long long>();
  c.dashed = w.at("dashed").get<long long>();
  return c;
}

IntersectionMatrix seed_diagram(char kind) {
  const auto& fig = active_fixtures().table("seed_diagrams");
  const std::string key(1, kind);
  if (!fig.contains(key)) throw DynkinError(std::string("unknown seed diagram '") + kind + "'");
  const auto& s = fig.at(key);
  const auto n = s.at("size").get<std::size_t>();
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  auto m = blank(labels);
  const long long plain = default_edge_convention().plain;
  for (const auto& e : s.at("edges"))
    set_edge(m, e.at(0).get<std::size_t>() - 1, e.at(1).get<std::size_t>() - 1, plain);
  return m;
}

IntersectionMatrix gabrielov_expand(const IntersectionMatrix& seed, const std::vector<long long>& M) {
  seed.check();
  if (M.size() != seed.size())
    throw DynkinError("expansion has " + std::to_string(M.size()) + " counts for a seed of size " +
                      std::to_string(seed.size()));
  for (long long v : M)
    if (v < 1) throw DynkinError("expansion counts must be positive");
  struct Idx {
    long long j, m;
  };
  std::vector<Idx> basis;
  const long long top = *std::max_element(M.begin(), M.end());
  for (long long m = 1; m <= top; ++m)
    for (std::size_t j = 0; j < M.size(); ++j)
      if (m <= M[j]) basis.push_back({static_cast<long long>(j), m});
  std::vector<std::string> labels;
  for (const auto& b : basis)
    labels.push_back("e" + std::to_string(b.j + 1) + "^" + std::to_string(b.m));
  auto out = blank(labels);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      const long long j = basis[a].j, m = basis[a].m, j2 = basis[b].j, m2 = basis[b].m;
      const long long dm = m2 - m, dj = j2 - j;
      long long v = 0;
      if (dm == 0)
        v = seed.at(j, j2);
      else if (std::llabs(dm) == 1 && dj == 0)
        v = 1;
      else if (std::llabs(dm) == 1 && dm * dj < 0)
        v = -seed.at(j, j2);
      set_edge(out, a, b, v);
    }
  return out;
}

IntersectionMatrix spqr_graph(const std::array<long long, 3>& g, const EdgeConvention& conv) {
  for (long long v : g)
    if (v < 1) throw DynkinError("Gabrielov numbers must be positive");
  const long long mu = g[0] + g[1] + g[2];
  std::vector<std::string> labels{"δ1"};
  std::array<std::size_t, 3> arm_end{};
  for (int a = 0; a < 3; ++a) {
    for (long long k = 1; k < g[a]; ++k)
      labels.push_back("δ" + std::to_string(a + 1) + "^" + std::to_string(k));
    arm_end[a] = labels.size() - 1;
  }
  labels.push_back("δ" + std::to_string(mu - 1));
  labels.push_back("δ" + std::to_string(mu));
  auto m = blank(labels);
  const std::size_t centre = 0, hub = labels.size() - 2, tip = labels.size() - 1;
  std::size_t pos = 1;
  for (int a = 0; a < 3; ++a) {
    for (long long k = 1; k + 1 < g[a]; ++k, ++pos) set_edge(m, pos, pos + 1, conv.plain);
    if (g[a] > 1) {
      ++pos;
      set_edge(m, arm_end[a], centre, conv.plain);
      set_edge(m, arm_end[a], hub, conv.plain);
    }
  }
  set_edge(m, centre, hub, conv.dbl);
  set_edge(m, hub, tip, conv.plain);
  return m;
}

IntersectionMatrix pi_graph(const std::array<long long, 4>& g, const EdgeConvention& conv) {
  for (long long v : g)
    if (v < 1) throw DynkinError("Gabrielov numbers must be positive");
  std::vector<std::string> labels;
  std::array<std::size_t, 4> arm_end{};
  std::array<bool, 4> has_arm{};
  for (int a = 0; a < 4; ++a) {
    for (long long k = 1; k < g[a]; ++k)
      labels.push_back("δ" + std::to_string(a + 1) + "^" + std::to_string(k));
    has_arm[a] = g[a] > 1;
    arm_end[a] = labels.size() - 1;
  }
  const long long rho = static_cast<long long>(labels.size()) + 5;
  for (long long k = 4; k >= 0; --k) labels.push_back("δ" + std::to_string(rho - k));
  auto m = blank(labels);
  const std::size_t base = labels.size() - 5;
  const std::size_t r4 = base, r3 = base + 1, r2 = base + 2, r1 = base + 3, r0 = base + 4;
  std::size_t pos = 0;
  for (int a = 0; a < 4; ++a) {
    for (long long k = 1; k + 1 < g[a]; ++k, ++pos) set_edge(m, pos, pos + 1, conv.plain);
    if (has_arm[a]) ++pos;
  }
  auto arm = [&](int a, std::size_t v) {
    if (has_arm[a]) set_edge(m, arm_end[a], v, conv.plain);
  };
  set_edge(m, r2, r0, conv.plain);
  set_edge(m, r2, r4, conv.dashed);
  set_edge(m, r4, r0, conv.plain);
  set_edge(m, r4, r3, conv.dbl);
  set_edge(m, r4, r1, conv.plain);
  set_edge(m, r0, r1, conv.dbl);
  set_edge(m, r3, r1, conv.plain);
  set_edge(m, r3, r0, conv.plain);
  arm(0, r4);
  arm(0, r3);
  arm(1, r4);
  arm(1, r3);
  arm(2, r0);
  arm(2, r1);
  arm(3, r0);
  arm(3, r1);
  return m;
}

IntersectionMatrix braid_move(const IntersectionMatrix& m, std::size_t i, bool inverse) {
  if (i < 1 || i >= m.size())
    throw DynkinError("braid move position " + std::to_string(i) + " out of range");
  const std::size_t a = i - 1, b = i;
  const long long c = m.at(a, b);
  IntersectionMatrix out = m;
  const std::size_t n = m.size();
  // New vectors: forward (b, a + c b), inverse (b + c a, a).
  for (std::size_t x = 0; x < n; ++x) {
    if (x == a || x == b) continue;
    long long first, second;
    if (!inverse) {
      first = m.at(x, b);
      second = checked_add_mul(m.at(x, a), c, m.at(x, b));
    } else {
      first = checked_add_mul(m.at(x, b), c, m.at(x, a));
      second = m.at(x, a);
    }
    set_edge(out, x, a, first);
    set_edge(out, x, b, second);
  }
  set_edge(out, a, b, -c);
  if (!inverse) {
    out.labels[a] = m.labels[b];
    out.labels[b] = "s(" + m.labels[b] + ")" + m.labels[a];
  } else {
    out.labels[a] = "s(" + m.labels[a] + ")" + m.labels[b];
    out.labels[b] = m.labels[a];
  }
  return out;
}

IntersectionMatrix negate_basis_vector(const IntersectionMatrix& m, std::size_t i) {
  if (i < 1 || i > m.size()) throw DynkinError("basis index out of range");
  IntersectionMatrix out = m;
  for (std::size_t x = 0; x < m.size(); ++x)
    if (x != i - 1) set_edge(out, x, i - 1, -m.at(x, i - 1));
  out.labels[i - 1] = "-" + m.labels[i - 1];
  return out;
}

std::vector<long long> coxeter_charpoly(const IntersectionMatrix& m) {
  m.check();
  const std::size_t n = m.size();
  std::vector<std::vector<mpz_class>> C(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) C[i][i] = 1;
  // Right-multiply by each reflection s_i: s_i(e_k) = e_k + <e_k, e_i> e_i.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < n; ++r) {
      mpz_class ci = C[r][i];
      if (ci == 0) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (k != i && m.at(k, i) != 0) C[r][k] += ci * static_cast<long>(m.at(k, i));
      C[r][i] += ci * static_cast<long>(m.at(i, i));
    }
  }
  std::vector<long long> out;
  for (const auto& z : berkowitz(C)) out.push_back(to_ll(z));
  return out;
}

std::string integer_poly_str(const std::vector<long long>& c) {
  const long long n = static_cast<long long>(c.size()) - 1;
  std::string s;
  for (long long i = 0; i <= n; ++i) {
    long long v = c[i], e = n - i;
    if (v == 0) continue;
    if (!s.empty()) s += v < 0 ? " - " : " + ";
    else if (v < 0) s += "-";
    long long a = std::llabs(v);
    std::string mono = e == 0 ? "" : e == 1 ? "t" : "t^" + std::to_string(e);
    if (mono.empty())
      s += std::to_string(a);
    else
      s += (a == 1 ? "" : std::to_string(a) + "*") + mono;
  }
  return s.empty() ? "0" : s;
}

long long gram_determinant(const IntersectionMatrix& m) {
  return to_ll(bareiss(to_mpz(m.entries)).second);
}

int gram_rank(const IntersectionMatrix& m) { return bareiss(to_mpz(m.entries)).first; }

nlohmann::json DiagramInvariants::to_json() const {
  return {{"coxeter_charpoly", integer_poly_str(charpoly)},
          {"coefficients", charpoly},
          {"determinant", determinant},
          {"rank", rank}};
}

DiagramInvariants diagram_invariants(const IntersectionMatrix& m) {
  DiagramInvariants d;
  d.charpoly = coxeter_charpoly(m);
  auto [r, det] = bareiss(to_mpz(m.entries));
  d.rank = r;
  d.determinant = to_ll(det);
  return d;
}

bool equal_up_to_signs(const IntersectionMatrix& a, const IntersectionMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return false;
  std::vector<int> sign(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (sign[s]) continue;
    sign[s] = 1;
    std::deque<std::size_t> q{s};
    while (!q.empty()) {
      std::size_t i = q.front();
      q.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        long long x = a.at(i, j), y = b.at(i, j);
        if (std::llabs(x) != std::llabs(y)) return false;
        if (x == 0) continue;
        int need = x == y ? sign[i] : -sign[i];
        if (!sign[j]) {
          sign[j] = need;
          q.push_back(j);
        } else if (sign[j] != need) {
          return false;
        }
      }
    }
  }
  return true;
}

nlohmann::json BraidSearchResult::to_json() const {
  nlohmann::json mv = nlohmann::json::array();
  for (const auto& [i, inv] : moves) mv.push_back({{"position", i}, {"inverse", inv}});
  return {{"found", found}, {"moves", mv}, {"explored", explored}, {"truncated", truncated}};
}

BraidSearchResult braid_search(const IntersectionMatrix& from, const IntersectionMatrix& to,
                               int max_depth, std::size_t max_states) {
  BraidSearchResult res;
  if (from.size() != to.size()) return res;
  struct Node {
    IntersectionMatrix m;
    std::size_t parent;
    std::pair<std::size_t, bool> move;
    int depth;
  };
  std::vector<Node> nodes{{from, 0, {0, false}, 0}};
  std::set<IntMatrix> seen{from.entries};
  std::size_t head = 0;
  auto path = [&](std::size_t k) {
    std::vector<std::pair<std::size_t, bool>> mv;
    for (; k != 0; k = nodes[k].parent) mv.push_back(nodes[k].move);
    std::reverse(mv.begin(), mv.end());
    return mv;
  };
  while (head < nodes.size()) {
    const std::size_t cur = head++;
    ++res.explored;
    if (equal_up_to_signs(nodes[cur].m, to)) {
      res.found = true;
      res.moves = path(cur);
      return res;
    }
    if (nodes[cur].depth >= max_depth) continue;
    for (std::size_t i = 1; i < from.size(); ++i)
      for (bool inv : {false, true}) {
        IntersectionMatrix next;
        try {
          next = braid_move(nodes[cur].m, i, inv);
        } catch (const DynkinError&) {
          continue;
        }
        if (!seen.insert(next.entries).second) continue;
        if (nodes.size() >= max_states) {
          res.truncated = true;
          continue;
        }
        nodes.push_back({std::move(next), cur, {i, inv}, nodes[cur].depth + 1});
      }
  }
  return res;
}

std::vector<long long> DiagramSpec::counts() const {
  std::vector<long long> out;
  for (const auto& parts : M) out.push_back(std::accumulate(parts.begin(), parts.end(), 0LL));
  return out;
}

std::array<long long, 3> DiagramSpec::gabrielov() const {
  if (gamma.size() != 3) throw DynkinError("a diagram row needs three Gabrielov numbers");
  std::array<long long, 3> g{};
  for (int i = 0; i < 3; ++i) g[i] = std::accumulate(gamma[i].begin(), gamma[i].end(), 0LL);
  return g;
}

DiagramSpec DiagramSpec::from_json(const nlohmann::json& row) {
  DiagramSpec s;
  s.name = row.at("name").get<std::string>();
  const auto seed = row.at("seed").get<std::string>();
  if (seed.size() != 1) throw DynkinError("seed must be one of a, b, c");
  s.seed = seed[0];
  s.M = row.at("M").get<std::vector<std::vector<long long>>>();
  s.gamma = row.at("gamma").get<std::vector<std::vector<long long>>>();
  s.mu = row.at("mu").get<long long>();
  const std::size_t arity = s.seed == 'a' ? 2 : s.seed == 'b' ? 3 : s.seed == 'c' ? 4 : 0;
  if (arity == 0) throw DynkinError("seed must be one of a, b, c");
  if (s.M.size() != arity)
    throw DynkinError(s.name + ": seed " + seed + " needs " + std::to_string(arity) + " counts");
  return s;
}

std::vector<DiagramSpec> diagram_specs() {
  std::vector<DiagramSpec> out;
  for (const auto& r : active_fixtures().table("bimodal_diagrams")) out.push_back(DiagramSpec::from_json(r));
  return out;
}

const DiagramSpec& diagram_spec(const std::string& name) {
  static const std::vector<DiagramSpec> specs = diagram_specs();
  for (const auto& s : specs)
    if (s.name == name) return s;
  throw DynkinError("unknown diagram '" + name + "'");
}

nlohmann::json DiagramComparison::to_json() const {
  auto c = spec.counts();
  auto g = spec.gabrielov();
  return {{"name", spec.name},
          {"seed", std::string(1, spec.seed)},
          {"M", c},
          {"gamma", g},
          {"mu", spec.mu},
          {"counts_match", counts_match},
          {"expanded", expanded_inv.to_json()},
          {"spqr", spqr_inv.to_json()},
          {"pass", pass()}};
}

DiagramComparison compare_diagrams(const DiagramSpec& spec, const EdgeConvention& conv) {
  DiagramComparison c;
  c.spec = spec;
  auto counts = spec.counts();
  auto g = spec.gabrielov();
  c.counts_match = std::accumulate(counts.begin(), counts.end(), 0LL) == spec.mu &&
                   g[0] + g[1] + g[2] == spec.mu;
  c.expanded = gabrielov_expand(seed_diagram(spec.seed), counts);
  c.spqr = spqr_graph(g, conv);
  c.expanded_inv = diagram_invariants(c.expanded);
  c.spqr_inv = diagram_invariants(c.spqr);
  return c;
}

EdgeConvention calibrate_edge_convention(const std::vector<DiagramSpec>& specs) {
  const EdgeConvention stored = default_edge_convention();
  std::vector<EdgeConvention> candidates{stored};
  for (long long d : {-2, 2, -1, 1}) {
    EdgeConvention c = stored;
    c.dbl = d;
    if (!(c == stored)) candidates.push_back(c);
  }
  for (const auto& c : candidates) {
    bool all = std::all_of(specs.begin(), specs.end(),
                           [&](const DiagramSpec& s) { return compare_diagrams(s, c).pass(); });
    if (all) return c;
  }
  throw DynkinError("no edge convention reconciles the expanded and Gabrielov-shaped diagrams");
}

const EdgeConvention& frozen_edge_convention() {
  static const EdgeConvention conv = calibrate_edge_convention(diagram_specs());
  return conv;
}

}  // namespace sdual
