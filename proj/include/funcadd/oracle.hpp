#pragma once

#include <vector>

#include "funcadd/ast.hpp"
#include "funcadd/eval.hpp"
#include "funcadd/outcome.hpp"
#include "funcadd/value.hpp"

namespace funcadd {
// A deliberately naive transcription of the eight-rule semantics as bounded
// search, for differential testing only.
namespace oracle {

// One successful derivation found by enumeration.
struct Derivation {
  Value result;
  std::vector<int> rule_path;  // applied rules, pre-order
  int depth_used = 0;          // deepest nested dispatch in the derivation
};

struct Enumeration {
  std::vector<Derivation> derivations;  // deduplicated by result value
  bool bound_exceeded = false;          // some branch hit the depth bound
};

// All derivable results within `depth_bound` nested dispatches, exploring
// clause choice as genuine branching while keeping choice expressions
// committed to their first successful branch.
Enumeration enumerate_outcomes(const Program& program, const Expr& expr,
                               int depth_bound);

struct LeftmostResult {
  Outcome outcome;
  // Rules applied during the leftmost-first search, in order, including
  // failed attempts; comparable against the engine trace.
  std::vector<int> rule_path;
};

// Deterministic strategy layered on the same rules: clause alternatives in
// textual order, choice branches left to right. Must observably agree with
// eval wherever neither hits a bound.
LeftmostResult first_success_leftmost(const Program& program, const Expr& expr,
                                      int depth_bound);

// The engine-trace projection comparable with LeftmostResult::rule_path:
// Enter-tagged events plus rule-7 leaves (closing and per-branch bookkeeping
// events are not rule applications).
std::vector<int> rule_applications(const Trace& trace);

}  // namespace oracle
}  // namespace funcadd
