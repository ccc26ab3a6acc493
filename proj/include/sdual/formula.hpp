#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace sdual {

using Bindings = std::map<std::string, mpq_class>;

class FormulaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arithmetic over exact rationals: integers, bound names, + - * /, parentheses.
mpq_class eval_formula(const std::string& expr, const Bindings& env);
long long eval_integer(const std::string& expr, const Bindings& env);

// Replaces every "{expr}" by the value of expr, which must be a non-negative integer.
std::string instantiate_template(const std::string& tmpl, const Bindings& env);

}  // namespace sdual
