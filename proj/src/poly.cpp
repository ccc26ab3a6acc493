#include "sdual/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace sdual {

bool GrlexLess::operator()(const Exps& a, const Exps& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

SparsePoly SparsePoly::monomial(const std::vector<std::string>& vars, const Exps& e,
                                const mpq_class& c) {
  SparsePoly p(vars);
  p.add_term(e, c);
  return p;
}

SparsePoly SparsePoly::constant(const std::vector<std::string>& vars, const mpq_class& c) {
  return monomial(vars, Exps(vars.size(), 0), c);
}

int SparsePoly::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

mpq_class SparsePoly::coeff(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void SparsePoly::add_term(const Exps& e, const mpq_class& c) {
  if (e.size() != vars_.size()) throw std::invalid_argument("exponent length mismatch");
  for (int v : e)
    if (v < 0) throw std::invalid_argument("negative exponent");
  mpq_class v = c;
  v.canonicalize();
  if (v == 0) return;
  auto [it, inserted] = terms_.emplace(e, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<Exps> SparsePoly::support() const {
  std::vector<Exps> out;
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

void SparsePoly::check_compatible(const SparsePoly& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("polynomials over different variables");
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.check_compatible(b);
  SparsePoly r(a.vars_);
  Exps e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

SparsePoly operator*(SparsePoly a, const mpq_class& c) {
  if (c == 0) return SparsePoly(a.vars_);
  for (auto& [e, v] : a.terms_) v *= c;
  return a;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

SparsePoly SparsePoly::pow(unsigned n) const {
  SparsePoly result = constant(vars_, 1), base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return result;
}

SparsePoly SparsePoly::derivative(std::size_t var) const {
  SparsePoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exps f = e;
    f[var] -= 1;
    r.add_term(f, c * e[var]);
  }
  return r;
}

SparsePoly SparsePoly::restrict_to(const std::vector<bool>& keep) const {
  SparsePoly r(vars_);
  for (const auto& [e, c] : terms_) {
    bool ok = true;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (!keep[i] && e[i] > 0) ok = false;
    if (ok) r.terms_.emplace(e, c);
  }
  return r;
}

SparsePoly SparsePoly::sub_sum(const std::vector<Exps>& exps) const {
  SparsePoly r(vars_);
  for (const auto& e : exps) r.add_term(e, coeff(e));
  return r;
}

bool SparsePoly::is_weighted_homogeneous(const std::vector<long long>& w,
                                         long long* degree) const {
  bool first = true;
  long long d = 0;
  for (const auto& [e, c] : terms_) {
    long long s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += w[i] * e[i];
    if (first) {
      d = s;
      first = false;
    } else if (s != d) {
      return false;
    }
  }
  if (degree) *degree = d;
  return true;
}

std::string SparsePoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpq_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool any = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any) mono << "*";
      mono << vars_[i];
      if (e[i] > 1) mono << "^" << e[i];
      any = true;
    }
    if (!any) {
      os << a.get_str();
    } else if (a == 1) {
      os << mono.str();
    } else {
      os << a.get_str() << "*" << mono.str();
    }
  }
  return os.str();
}

nlohmann::json SparsePoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    terms.push_back({{"exps", it->first},
                     {"num", it->second.get_num().get_str()},
                     {"den", it->second.get_den().get_str()}});
  }
  return {{"variables", vars_}, {"terms", terms}, {"text", str()}};
}

std::ostream& operator<<(std::ostream& os, const SparsePoly& p) { return os << p.str(); }

namespace {

class Parser {
 public:
  Parser(const std::string& s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

  SparsePoly parse() {
    SparsePoly result(vars_);
    skip();
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = get() == '-' ? -1 : 1;
      skip();
    }
    result += term() * mpq_class(sign);
    skip();
    while (pos_ < s_.size()) {
      char op = peek();
      if (op != '+' && op != '-') throw ParseError("expected '+' or '-'", pos_);
      ++pos_;
      skip();
      SparsePoly t = term();
      if (op == '+')
        result += t;
      else
        result -= t;
      skip();
    }
    return result;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool read_uint(mpz_class& out) {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) return false;
    out = mpz_class(s_.substr(start, pos_ - start));
    return true;
  }

  SparsePoly term() {
    SparsePoly t = SparsePoly::constant(vars_, 1);
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num, den = 1;
      read_uint(num);
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        std::size_t at = pos_;
        if (!read_uint(den) || den == 0) throw ParseError("expected positive denominator", at);
        skip();
      }
      mpq_class c(num, den);
      c.canonicalize();
      t = t * c;
      need_factor = false;
      if (peek() != '*') return t;
      ++pos_;
      skip();
      need_factor = true;
    }
    while (true) {
      if (need_factor || std::isalpha(static_cast<unsigned char>(peek())) || peek() == '(') {
        t = t * factor();
        need_factor = false;
      }
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        need_factor = true;
        continue;
      }
      break;
    }
    return t;
  }

  SparsePoly factor() {
    std::size_t at = pos_;
    SparsePoly base(vars_);
    if (peek() == '(') {
      ++pos_;
      std::size_t close = matching(at);
      Parser inner(s_.substr(at + 1, close - at - 1), vars_);
      try {
        base = inner.parse();
      } catch (const ParseError& e) {
        throw ParseError("in parenthesised expression", at + 1 + e.position());
      }
      pos_ = close + 1;
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class n;
      read_uint(n);
      base = SparsePoly::constant(vars_, mpq_class(n));
    } else {
      std::string name;
      while (std::isalpha(static_cast<unsigned char>(peek()))) name += get();
      if (name.empty()) throw ParseError("expected variable", at);
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) throw ParseError("unknown variable '" + name + "'", at);
      Exps e(vars_.size(), 0);
      e[it - vars_.begin()] = 1;
      base = SparsePoly::monomial(vars_, e);
    }
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t eat = pos_;
      if (peek() == '-') throw ParseError("negative exponent", eat);
      mpz_class n;
      if (!read_uint(n)) throw ParseError("expected exponent", eat);
      if (n > 100000) throw ParseError("exponent too large", eat);
      base = base.pow(static_cast<unsigned>(n.get_ui()));
    }
    return base;
  }

  std::size_t matching(std::size_t open) const {
    int depth = 0;
    for (std::size_t i = open; i < s_.size(); ++i) {
      if (s_[i] == '(') ++depth;
      if (s_[i] == ')' && --depth == 0) return i;
    }
    throw ParseError("unbalanced parenthesis", open);
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
  if (text.find_first_not_of(" \t\n") == std::string::npos) throw ParseError("empty input", 0);
  return Parser(text, vars).parse();
}

SparsePoly substitute(const SparsePoly& p, const std::string& var,
                      const SparsePoly& replacement) {
  int k = p.var_index(var);
  if (k < 0) throw std::invalid_argument("unknown variable '" + var + "'");
  SparsePoly result(p.variables());
  std::map<int, SparsePoly> powers;
  for (const auto& [e, c] : p.terms()) {
    Exps rest = e;
    int n = rest[k];
    rest[k] = 0;
    auto it = powers.find(n);
    if (it == powers.end()) it = powers.emplace(n, replacement.pow(n)).first;
    result += SparsePoly::monomial(p.variables(), rest, c) * it->second;
  }
  return result;
}

const std::vector<std::string>& xyz_vars() {
  static const std::vector<std::string> v{"x", "y", "z"};
  return v;
}

const std::vector<std::string>& XYZW_vars() {
  static const std::vector<std::string> v{"X", "Y", "Z", "W"};
  return v;
}

}  // namespace sdual
