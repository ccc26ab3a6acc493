#include "sdual/formula.hpp"

#include <cctype>

namespace sdual {

namespace {

class Evaluator {
 public:
  Evaluator(const std::string& s, const Bindings& env) : s_(s), env_(env) {}

  mpq_class run() {
    mpq_class v = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw FormulaError(what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  mpq_class sum() {
    mpq_class v = product();
    while (peek() == '+' || peek() == '-') {
      char op = s_[pos_++];
      mpq_class r = product();
      v = op == '+' ? mpq_class(v + r) : mpq_class(v - r);
    }
    return v;
  }

  mpq_class product() {
    mpq_class v = unary();
    while (peek() == '*' || peek() == '/') {
      char op = s_[pos_++];
      mpq_class r = unary();
      if (op == '/') {
        if (r == 0) fail("division by zero");
        v /= r;
      } else {
        v *= r;
      }
    }
    return v;
  }

  mpq_class unary() {
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return atom();
  }

  mpq_class atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      mpq_class v = sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return mpq_class(mpz_class(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto it = env_.find(name);
      if (it == env_.end()) {
        pos_ = start;
        fail("unbound name '" + name + "'");
      }
      return it->second;
    }
    fail("expected a value");
  }

  const std::string& s_;
  const Bindings& env_;
  std::size_t pos_ = 0;
};

}  // namespace

mpq_class eval_formula(const std::string& expr, const Bindings& env) {
  return Evaluator(expr, env).run();
}

long long eval_integer(const std::string& expr, const Bindings& env) {
  mpq_class v = eval_formula(expr, env);
  if (v.get_den() != 1) throw FormulaError("'" + expr + "' is not an integer: " + v.get_str());
  if (!v.get_num().fits_slong_p()) throw FormulaError("'" + expr + "' is too large");
  return v.get_num().get_si();
}

std::string instantiate_template(const std::string& tmpl, const Bindings& env) {
  std::string out;
  for (std::size_t i = 0; i < tmpl.size(); ++i) {
    if (tmpl[i] != '{') {
      out += tmpl[i];
      continue;
    }
    std::size_t close = tmpl.find('}', i);
    if (close == std::string::npos) throw FormulaError("unterminated '{' in '" + tmpl + "'");
    long long v = eval_integer(tmpl.substr(i + 1, close - i - 1), env);
    if (v < 0) throw FormulaError("negative value in '" + tmpl + "'");
    out += std::to_string(v);
    i = close;
  }
  return out;
}

}  // namespace sdual
