#include "sdual/univariate.hpp"

#include <stdexcept>

namespace sdual {

UniPoly::UniPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& v : c_) v.canonicalize();
  trim();
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::from_sparse(const SparsePoly& p, std::size_t var) {
  std::vector<mpq_class> c;
  for (const auto& [e, v] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i] != 0) throw std::invalid_argument("polynomial is not univariate");
    std::size_t k = static_cast<std::size_t>(e[var]);
    if (c.size() <= k) c.resize(k + 1, 0);
    c[k] += v;
  }
  return UniPoly(c);
}

UniPoly UniPoly::derivative() const {
  std::vector<mpq_class> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return UniPoly(d);
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<mpq_class> d = c_;
  mpq_class l = lead();
  for (auto& v : d) v /= l;
  return UniPoly(d);
}

void divmod(const UniPoly& a, const UniPoly& b, UniPoly* q, UniPoly* r) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<mpq_class> rem = a.coeffs();
  int db = b.degree();
  std::vector<mpq_class> quo(std::max(0, a.degree() - db + 1), 0);
  for (int k = a.degree(); k >= db; --k) {
    mpq_class f = rem[k] / b.lead();
    if (f == 0) continue;
    quo[k - db] = f;
    for (int i = 0; i <= db; ++i) rem[k - db + i] -= f * b.coeffs()[i];
  }
  if (q) *q = UniPoly(quo);
  if (r) *r = UniPoly(rem);
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r;
    divmod(x, y, nullptr, &r);
    x = y;
    y = r;
  }
  return x.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return p.monic();
  UniPoly g = gcd(p, p.derivative());
  UniPoly q;
  divmod(p, g, &q, nullptr);
  return q.monic();
}

int distinct_nonzero_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has infinitely many roots");
  UniPoly s = squarefree_part(p);
  int n = s.degree();
  if (n > 0 && s.coeffs()[0] == 0) --n;
  return n;
}

}  // namespace sdual
