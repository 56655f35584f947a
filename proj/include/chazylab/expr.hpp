#pragma once
// Tiny arithmetic-expression evaluator over jets, used to keep the curve
// catalogue as data. Supports + - * / ^, parentheses, the constants i, w
// (primitive cube root of unity) and pi, and sqrt/sin/cos/tan/exp/log.
// Integer powers are expanded by repeated multiplication so they stay exact
// across branch cuts; fractional powers use the principal branch.

#include <map>
#include <stdexcept>
#include <string>

#include "chazylab/jet.hpp"

namespace chazylab {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string &what) : std::runtime_error("expression: " + what) {}
};

Jet eval_expr(const std::string &text, const std::map<std::string, Jet> &vars,
              BranchSpec branch = {});

} // namespace chazylab
