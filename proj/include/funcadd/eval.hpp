#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "funcadd/ast.hpp"
#include "funcadd/outcome.hpp"
#include "funcadd/trace.hpp"
#include "funcadd/value.hpp"

namespace funcadd {

struct Limits {
  int max_call_depth = 10000;
  int max_choice_width = 256;
  size_t max_trace_events = 1'000'000;
};

// The binding produced by matching one clause head, in parameter order.
class Substitution {
 public:
  void bind(Symbol name, Value v) { entries_.emplace_back(name, std::move(v)); }
  const Value* lookup(Symbol name) const;
  bool empty() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }
  const std::vector<std::pair<Symbol, Value>>& entries() const {
    return entries_;
  }

 private:
  std::vector<std::pair<Symbol, Value>> entries_;
};

// A variable missing from the substitution indicates a resolver bug, not a
// user error.
class UnboundVariableError : public std::logic_error {
 public:
  explicit UnboundVariableError(Symbol name)
      : std::logic_error("unbound variable '" + name.str() + "'"),
        name_(name) {}
  Symbol name() const { return name_; }

 private:
  Symbol name_;
};

// Position-wise head match: NoMatch (nullopt) on arity or constant mismatch,
// otherwise the accumulated bindings.
std::optional<Substitution> match_head(const Clause& clause,
                                       const std::vector<Value>& args);

// Literal substitution: every variable replaced by the ground embedding of
// its value. Throws UnboundVariableError on a variable outside the domain.
ExprPtr substitute(const ExprPtr& expr, const Substitution& sub);

// Embeds a value as a ground expression (cons cells become `cons` calls).
ExprPtr embed_value(const Value& v, Span span);

// Big-step evaluation of a closed expression. `trace` may be null; when it is
// not, limits.max_trace_events applies.
Outcome eval(const Program& program, const Expr& expr, const Limits& limits,
             Trace* trace);

// Clause scan in textual order with deep backtracking: a matching clause
// whose body soft-fails does not doom the call. `depth` is the callee depth
// (caller depth + 1).
Outcome backchain(const std::vector<Clause>& candidates,
                  const Program& program, Symbol fname,
                  const std::vector<Value>& args, Span call_site,
                  const Limits& limits, Trace* trace, int depth);

struct EvalRun {
  Outcome outcome;
  Trace trace;
};

// Evaluates an entry expression with a fresh trace buffer, on a thread with
// enough stack for limits.max_call_depth.
EvalRun run_main(const Program& program, const ExprPtr& entry,
                 const Limits& limits = {});

}  // namespace funcadd
