#include "sdual/grading.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace sdual {

long long WeightSystem::gcd() const {
  long long g = 0;
  for (auto w : weights) g = std::gcd(g, w);
  for (auto d : degrees) g = std::gcd(g, d);
  return g;
}

std::string WeightSystem::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < weights.size(); ++i) os << (i ? "," : "") << weights[i];
  os << ";";
  for (std::size_t i = 0; i < degrees.size(); ++i) os << (i ? "," : "") << degrees[i];
  os << ")";
  return os.str();
}

nlohmann::json WeightSystem::to_json() const {
  return {{"weights", weights}, {"degrees", degrees}};
}

long long FiniteAbelianGroup::order() const {
  long long o = 1;
  for (auto d : invariant_factors) o *= d;
  return o;
}

nlohmann::json FiniteAbelianGroup::to_json() const {
  return {{"invariant_factors", invariant_factors}, {"order", order()}};
}

long long det(const IntMatrix& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);
  }
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  mpz_class r = a[n - 1][n - 1] * sign;
  return r.get_si();
}

IntMatrix adjugate3(const IntMatrix& m) {
  IntMatrix a(3, std::vector<long long>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      a[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  return a;
}

IntMatrix transpose(const IntMatrix& m) {
  if (m.empty()) return {};
  IntMatrix t(m[0].size(), std::vector<long long>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.size(), std::vector<long long>(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[k].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

int rank(const IntMatrix& m) {
  if (m.empty()) return 0;
  std::vector<std::vector<mpq_class>> a(m.size(), std::vector<mpq_class>(m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) a[i][j] = static_cast<long>(m[i][j]);
  int r = 0;
  std::size_t rows = a.size(), cols = a[0].size();
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == static_cast<std::size_t>(r) || a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

WeightSystem canonical_weights(const IntMatrix& E) {
  if (E.size() != 3 || E[0].size() != 3) throw std::invalid_argument("expected a 3x3 matrix");
  long long d = det(E);
  if (d == 0) throw SingularMatrix("exponent matrix is singular");
  IntMatrix adj = adjugate3(E);
  WeightSystem w;
  long long s = d < 0 ? -1 : 1;
  for (int i = 0; i < 3; ++i) {
    long long v = s * (adj[i][0] + adj[i][1] + adj[i][2]);
    if (v <= 0) throw std::invalid_argument("non-positive canonical weight");
    w.weights.push_back(v);
  }
  w.degrees = {s * d};
  for (int i = 0; i < 3; ++i) {
    long long row = 0;
    for (int j = 0; j < 3; ++j) row += E[i][j] * w.weights[j];
    if (row != w.degrees[0]) throw std::logic_error("canonical weights fail E*w = d*1");
  }
  return w;
}

std::pair<WeightSystem, long long> reduce_weights(const WeightSystem& w) {
  long long g = w.gcd();
  if (g == 0) return {w, 1};
  WeightSystem r = w;
  for (auto& v : r.weights) v /= g;
  for (auto& v : r.degrees) v /= g;
  return {r, g};
}

long long gorenstein_parameter(const WeightSystem& reduced) {
  if (reduced.weights.size() != 3 || reduced.degrees.size() != 1)
    throw std::invalid_argument("Gorenstein parameter needs a 3-variable hypersurface system");
  return reduced.degrees[0] - reduced.weights[0] - reduced.weights[1] - reduced.weights[2];
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) { std::swap(m[a], m[b]); }

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

// row_a -= q * row_b
void add_row(IntMatrix& m, std::size_t a, std::size_t b, long long q) {
  for (std::size_t j = 0; j < m[a].size(); ++j) m[a][j] -= q * m[b][j];
}

void add_col(IntMatrix& m, std::size_t a, std::size_t b, long long q) {
  for (auto& row : m) row[a] -= q * row[b];
}

long long floordiv(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  SmithForm s{identity(rows), m, identity(cols)};
  IntMatrix& D = s.D;
  std::size_t t = 0;
  while (t < std::min(rows, cols)) {
    std::size_t pr = rows, pc = cols;
    long long best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (D[i][j] != 0 && (best == 0 || std::llabs(D[i][j]) < best)) {
          best = std::llabs(D[i][j]);
          pr = i;
          pc = j;
        }
    if (best == 0) break;
    swap_rows(D, t, pr);
    swap_rows(s.U, t, pr);
    swap_cols(D, t, pc);
    swap_cols(s.V, t, pc);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D[i][t] == 0) continue;
        long long q = floordiv(D[i][t], D[t][t]);
        add_row(D, i, t, q);
        add_row(s.U, i, t, q);
        if (D[i][t] != 0) {
          swap_rows(D, t, i);
          swap_rows(s.U, t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D[t][j] == 0) continue;
        long long q = floordiv(D[t][j], D[t][t]);
        add_col(D, j, t, q);
        add_col(s.V, j, t, q);
        if (D[t][j] != 0) {
          swap_cols(D, t, j);
          swap_cols(s.V, t, j);
          clean = false;
        }
      }
      if (clean) {
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (D[i][j] % D[t][t] != 0) {
              add_row(D, t, i, -1);
              add_row(s.U, t, i, -1);
              clean = false;
              break;
            }
      }
    }
    if (D[t][t] < 0) {
      for (auto& v : D[t]) v = -v;
      for (auto& v : s.U[t]) v = -v;
    }
    ++t;
  }
  return s;
}

FiniteAbelianGroup symmetry_group(const IntMatrix& E) {
  if (det(E) == 0) throw SingularMatrix("exponent matrix is singular");
  auto s = smith_normal_form(E);
  FiniteAbelianGroup g;
  for (std::size_t i = 0; i < s.D.size(); ++i)
    if (s.D[i][i] > 1) g.invariant_factors.push_back(s.D[i][i]);
  return g;
}

long long grading_index(const IntMatrix& E) {
  if (det(E) == 0) throw SingularMatrix("exponent matrix is singular");
  // Group elements theta with E*theta integral are identified with Z^n / E Z^n via
  // theta -> E*theta; the exponential grading operator becomes the all-ones vector.
  auto s = smith_normal_form(E);
  std::size_t n = E.size();
  std::vector<long long> ones(n, 1);
  long long order = 1, group = 1;
  for (std::size_t i = 0; i < n; ++i) {
    long long v = 0;
    for (std::size_t j = 0; j < n; ++j) v += s.U[i][j] * ones[j];
    long long di = s.D[i][i];
    group *= di;
    long long g = std::gcd(di, ((v % di) + di) % di);
    long long oi = di / (g == 0 ? di : g);
    order = std::lcm(order, oi);
  }
  return group / order;
}

long long grading_index_bruteforce(const IntMatrix& E) {
  long long d = std::llabs(det(E));
  if (d == 0) throw SingularMatrix("exponent matrix is singular");
  std::size_t n = E.size();
  if (n != 3) throw std::invalid_argument("brute force check is implemented for n = 3");
  long long members = 0;
  for (long long a = 0; a < d; ++a)
    for (long long b = 0; b < d; ++b)
      for (long long c = 0; c < d; ++c) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
          ok = (E[i][0] * a + E[i][1] * b + E[i][2] * c) % d == 0;
        if (ok) ++members;
      }
  auto w = canonical_weights(E);
  std::set<std::vector<long long>> cyclic;
  std::vector<long long> cur(n, 0);
  do {
    cyclic.insert(cur);
    for (std::size_t i = 0; i < n; ++i) cur[i] = (cur[i] + w.weights[i]) % w.degrees[0];
  } while (!cyclic.count(cur));
  return members / static_cast<long long>(cyclic.size());
}

long long dual_sl_count(const IntMatrix& E, long long limit) {
  IntMatrix Et = transpose(E);
  if (det(Et) == 0) throw SingularMatrix("exponent matrix is singular");
  // Elements theta of (Q/Z)^n with Et*theta integral are V * (k_i / D_i), where
  // U * Et * V = D.
  auto s = smith_normal_form(Et);
  std::size_t n = Et.size();
  long long order = 1;
  for (std::size_t i = 0; i < n; ++i) order *= s.D[i][i];
  if (order > limit) return -1;
  std::vector<long long> k(n, 0);
  long long count = 0;
  for (long long idx = 0; idx < order; ++idx) {
    long long r = idx;
    for (std::size_t i = 0; i < n; ++i) {
      k[i] = r % s.D[i][i];
      r /= s.D[i][i];
    }
    mpq_class sum = 0;
    for (std::size_t row = 0; row < n; ++row)
      for (std::size_t i = 0; i < n; ++i) {
        mpq_class q(static_cast<long>(s.V[row][i] * k[i]), static_cast<long>(s.D[i][i]));
        q.canonicalize();
        sum += q;
      }
    if (sum.get_den() == 1) ++count;
  }
  return count;
}

std::vector<long long> kernel_primitive(const IntMatrix& E) {
  if (E.size() != 4 || E[0].size() != 3) throw std::invalid_argument("expected a 4x3 matrix");
  if (rank(E) < 3) throw std::invalid_argument("kernel has dimension greater than one");
  IntMatrix Et = transpose(E);
  std::vector<long long> v(4);
  for (int j = 0; j < 4; ++j) {
    IntMatrix minor(3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 4; ++c)
        if (c != j) minor[r].push_back(Et[r][c]);
    v[j] = ((j % 2) ? -1 : 1) * det(minor);
  }
  long long g = 0;
  for (auto x : v) g = std::gcd(g, std::llabs(x));
  for (auto& x : v) x /= g;
  for (auto x : v)
    if (x != 0) {
      if (x < 0)
        for (auto& y : v) y = -y;
      break;
    }
  return v;
}

std::vector<std::vector<long long>> integer_kernel(const IntMatrix& M) {
  if (M.empty()) return {};
  auto s = smith_normal_form(M);
  std::size_t cols = M[0].size();
  std::vector<std::vector<long long>> basis;
  for (std::size_t j = 0; j < cols; ++j) {
    bool zero = j >= s.D.size() || s.D[j][j] == 0;
    if (!zero) continue;
    std::vector<long long> v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = s.V[i][j];
    basis.push_back(v);
  }
  return basis;
}

}  // namespace sdual
