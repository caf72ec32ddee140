#include "funcadd/oracle.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "funcadd/builtins.hpp"
#include "funcadd/pretty.hpp"

namespace funcadd {
namespace oracle {

namespace {

// ----------------------------------------------------------------------------
// Leftmost deterministic search
//
// The same rules the engine implements, transcribed directly: clause
// alternatives in textual order with deep backtracking, choice branches left
// to right, literal substitution everywhere. Records every applied rule.
// ----------------------------------------------------------------------------

class LeftmostSearch {
 public:
  LeftmostSearch(const Program& program, int depth_bound)
      : program_(program), bound_(depth_bound) {}

  Outcome eval(const Expr& e, int depth) {
    if (const auto* lit = std::get_if<LitExpr>(&e.node)) {
      path_.push_back(7);
      return Outcome::success(Value::from_literal(lit->value));
    }
    if (const auto* var = std::get_if<VarExpr>(&e.node)) {
      return Outcome::hard_error(HardErrorKind::UnboundVariable,
                                 "unbound variable '" + var->name.str() + "'");
    }
    if (const auto* call = std::get_if<CallExpr>(&e.node)) {
      return eval_call(e, *call, depth);
    }
    if (const auto* choice = std::get_if<ChoiceExpr>(&e.node)) {
      path_.push_back(8);
      Outcome last = Outcome::soft_fail(FailReason::ExplicitFail);
      for (const ExprPtr& b : choice->branches) {
        Outcome o = eval(*b, depth);
        if (o.is_success() || o.is_hard_error()) return o;
        last = std::move(o);
      }
      return last;
    }
    const auto& ifx = std::get<IfExpr>(e.node);
    Outcome cond = eval(*ifx.cond, depth);
    if (!cond.is_success()) return cond;
    const Value& v = cond.value();
    if (v.is_atom() && v.atom_name() == atoms::true_()) {
      return eval(*ifx.then_arm, depth);
    }
    if (v.is_atom() && v.atom_name() == atoms::false_()) {
      return eval(*ifx.else_arm, depth);
    }
    return Outcome::soft_fail(FailReason::TypeMismatch,
                              Provenance{ifx.cond->span, pretty(*ifx.cond)});
  }

  std::vector<int> take_path() { return std::move(path_); }

 private:
  Outcome eval_call(const Expr& e, const CallExpr& call, int depth) {
    if (!call.args.empty()) path_.push_back(6);
    std::vector<Value> args;
    args.reserve(call.args.size());
    for (const ExprPtr& a : call.args) {
      Outcome o = eval(*a, depth);
      if (!o.is_success()) return o;
      args.push_back(o.value());
    }

    if (const BuiltinEntry* entry = find_builtin(call.fname, args.size())) {
      return entry->apply(args).with_provenance(
          Provenance{e.span, call.fname.str()});
    }
    if (is_builtin_name(call.fname)) {
      return Outcome::soft_fail(FailReason::NoMatchingClause,
                                Provenance{e.span, call.fname.str()});
    }

    path_.push_back(5);
    if (depth + 1 > bound_) {
      return Outcome::hard_error(
          HardErrorKind::DepthExceeded,
          "depth bound " + std::to_string(bound_) + " exceeded",
          Provenance{e.span, call.fname.str()});
    }
    return backchain(call.fname, args, e.span, depth + 1);
  }

  Outcome backchain(Symbol fname, const std::vector<Value>& args,
                    Span call_site, int depth) {
    const std::vector<Clause>& clauses = program_.clauses();
    const size_t m = clauses.size();
    std::optional<Outcome> last_soft;
    bool any_matched = false;

    for (size_t k = 0; k < m; ++k) {
      const Clause& clause = clauses[k];
      if (k > 0) path_.push_back(3);
      if (m - k >= 2) path_.push_back(2);
      if (clause.fname != fname || clause.params.size() != args.size()) {
        continue;
      }
      std::optional<Substitution> sub = match_head(clause, args);
      if (!sub) continue;
      any_matched = true;
      if (clause.has_var_params()) path_.push_back(4);
      path_.push_back(1);
      Outcome o = eval(*substitute(clause.body, *sub), depth);
      if (o.is_success() || o.is_hard_error()) return o;
      last_soft = std::move(o);
    }

    if (!any_matched) {
      return Outcome::soft_fail(FailReason::NoMatchingClause,
                                Provenance{call_site, fname.str()});
    }
    return *last_soft;
  }

  const Program& program_;
  int bound_;
  std::vector<int> path_;
};

// ----------------------------------------------------------------------------
// Full enumeration
//
// The rules derive successes only; failure is the absence of a derivation
// within the bound. Clause choice branches genuinely (the result is the
// union over matching clauses); choice expressions stay committed to their
// first branch with any derivation at all.
// ----------------------------------------------------------------------------

struct EnumSet {
  // Keyed by canonical value text: deduplicated by result, first path kept.
  std::map<std::string, Derivation> found;
  bool bound_exceeded = false;

  void add(Derivation d) {
    std::string key = pretty(d.result);
    if (found.find(key) == found.end()) {
      found.emplace(std::move(key), std::move(d));
    }
  }
};

class Enumerator {
 public:
  Enumerator(const Program& program, int depth_bound)
      : program_(program), bound_(depth_bound) {}

  EnumSet eval(const Expr& e, int depth) {
    EnumSet out;
    if (const auto* lit = std::get_if<LitExpr>(&e.node)) {
      out.add(Derivation{Value::from_literal(lit->value), {7}, 0});
      return out;
    }
    if (std::get_if<VarExpr>(&e.node)) {
      return out;  // no rule derives an unbound variable
    }
    if (const auto* call = std::get_if<CallExpr>(&e.node)) {
      return eval_call(*call, depth);
    }
    if (const auto* choice = std::get_if<ChoiceExpr>(&e.node)) {
      for (const ExprPtr& b : choice->branches) {
        EnumSet branch = eval(*b, depth);
        if (!branch.found.empty()) {
          // Rule 8 commits here; later branches contribute nothing.
          for (auto& [key, d] : branch.found) {
            d.rule_path.insert(d.rule_path.begin(), 8);
            out.add(std::move(d));
          }
          out.bound_exceeded = branch.bound_exceeded;
          return out;
        }
        if (branch.bound_exceeded) {
          // Whether this branch could succeed is unknown; committing to a
          // later branch would be unsound.
          out.bound_exceeded = true;
          return out;
        }
      }
      return out;
    }
    const auto& ifx = std::get<IfExpr>(e.node);
    EnumSet cond = eval(*ifx.cond, depth);
    out.bound_exceeded = cond.bound_exceeded;
    for (const auto& [key, cd] : cond.found) {
      const Value& v = cd.result;
      if (!v.is_atom()) continue;
      const Expr* arm = nullptr;
      if (v.atom_name() == atoms::true_()) arm = ifx.then_arm.get();
      else if (v.atom_name() == atoms::false_()) arm = ifx.else_arm.get();
      if (!arm) continue;
      EnumSet arm_set = eval(*arm, depth);
      out.bound_exceeded |= arm_set.bound_exceeded;
      for (auto& [akey, ad] : arm_set.found) {
        std::vector<int> path = cd.rule_path;
        path.insert(path.end(), ad.rule_path.begin(), ad.rule_path.end());
        out.add(Derivation{ad.result, std::move(path),
                           std::max(cd.depth_used, ad.depth_used)});
      }
    }
    return out;
  }

 private:
  struct Partial {
    std::vector<Value> args;
    std::vector<int> path;
    int depth_used = 0;
  };

  EnumSet eval_call(const CallExpr& call, int depth) {
    EnumSet out;
    std::vector<Partial> partials{Partial{}};
    if (!call.args.empty()) partials.front().path.push_back(6);

    for (const ExprPtr& a : call.args) {
      EnumSet arg_set = eval(*a, depth);
      out.bound_exceeded |= arg_set.bound_exceeded;
      if (arg_set.found.empty()) return out;  // rule 6 needs every argument
      std::vector<Partial> next;
      next.reserve(partials.size() * arg_set.found.size());
      for (const Partial& p : partials) {
        for (const auto& [key, d] : arg_set.found) {
          Partial q = p;
          q.args.push_back(d.result);
          q.path.insert(q.path.end(), d.rule_path.begin(), d.rule_path.end());
          q.depth_used = std::max(q.depth_used, d.depth_used);
          next.push_back(std::move(q));
        }
      }
      partials = std::move(next);
    }

    for (const Partial& p : partials) {
      dispatch(call.fname, p, depth, out);
    }
    return out;
  }

  void dispatch(Symbol fname, const Partial& p, int depth, EnumSet& out) {
    if (const BuiltinEntry* entry = find_builtin(fname, p.args.size())) {
      Outcome o = entry->apply(p.args);
      if (o.is_success()) {
        out.add(Derivation{o.value(), p.path, p.depth_used});
      }
      return;
    }
    if (is_builtin_name(fname)) return;

    if (depth + 1 > bound_) {
      out.bound_exceeded = true;
      return;
    }
    const size_t total = program_.size();
    for (size_t pos : program_.clause_positions(fname, p.args.size())) {
      const Clause& clause = program_.clauses()[pos];
      std::optional<Substitution> sub = match_head(clause, p.args);
      if (!sub) continue;
      EnumSet body = eval(*substitute(clause.body, *sub), depth + 1);
      out.bound_exceeded |= body.bound_exceeded;
      for (auto& [key, bd] : body.found) {
        std::vector<int> path = p.path;
        path.push_back(5);
        // Conjunction navigation of this derivation: descend right `pos`
        // times, then select the leaf if the suffix is still a conjunction.
        path.insert(path.end(), pos, 3);
        if (pos + 1 < total) path.push_back(2);
        if (clause.has_var_params()) path.push_back(4);
        path.push_back(1);
        path.insert(path.end(), bd.rule_path.begin(), bd.rule_path.end());
        out.add(Derivation{bd.result, std::move(path),
                           std::max(p.depth_used, 1 + bd.depth_used)});
      }
    }
  }

  const Program& program_;
  int bound_;
};

}  // namespace

Enumeration enumerate_outcomes(const Program& program, const Expr& expr,
                               int depth_bound) {
  Enumerator en(program, depth_bound);
  EnumSet set = en.eval(expr, 0);
  Enumeration result;
  result.bound_exceeded = set.bound_exceeded;
  result.derivations.reserve(set.found.size());
  for (auto& [key, d] : set.found) result.derivations.push_back(std::move(d));
  return result;
}

LeftmostResult first_success_leftmost(const Program& program, const Expr& expr,
                                      int depth_bound) {
  LeftmostSearch search(program, depth_bound);
  Outcome outcome = search.eval(expr, 0);
  return LeftmostResult{std::move(outcome), search.take_path()};
}

std::vector<int> rule_applications(const Trace& trace) {
  std::vector<int> rules;
  rules.reserve(trace.events.size());
  for (const TraceEvent& e : trace.events) {
    if (e.tag == EventTag::Enter || e.rule == 7) rules.push_back(e.rule);
  }
  return rules;
}

}  // namespace oracle
}  // namespace funcadd
