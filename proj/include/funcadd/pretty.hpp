#pragma once

#include <string>

#include "funcadd/ast.hpp"
#include "funcadd/value.hpp"

namespace funcadd {

// Canonical text; reparses to an equal structure. Minimal parentheses,
// operators spaced, cons chains ending in nil printed as list literals.
std::string pretty(const Literal& lit);
std::string pretty(const Value& v);
std::string pretty(const Expr& expr);
std::string pretty(const ExprPtr& expr);
std::string pretty(const Clause& clause);
std::string pretty(const Program& program);

// The clause head as written, e.g. `div(x, y)` or `fact(0)`.
std::string pretty_head(const Clause& clause);

std::string pretty(const Param& param);

}  // namespace funcadd
