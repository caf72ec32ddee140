#include "funcadd/eval.hpp"

#include <pthread.h>

#include <exception>
#include <functional>
#include <string>
#include <utility>

#include "funcadd/builtins.hpp"
#include "funcadd/pretty.hpp"

namespace funcadd {

// ----------------------------------------------------------------------------
// Substitution
// ----------------------------------------------------------------------------

const Value* Substitution::lookup(Symbol name) const {
  for (const auto& [key, value] : entries_) {
    if (key == name) return &value;
  }
  return nullptr;
}

std::optional<Substitution> match_head(const Clause& clause,
                                       const std::vector<Value>& args) {
  if (clause.params.size() != args.size()) return std::nullopt;
  Substitution sub;
  for (size_t i = 0; i < args.size(); ++i) {
    const Param& p = clause.params[i];
    if (p.is_var()) {
      sub.bind(p.var_name(), args[i]);
    } else if (Value::from_literal(p.literal()) != args[i]) {
      return std::nullopt;
    }
  }
  return sub;
}

ExprPtr embed_value(const Value& v, Span span) {
  if (v.is_int()) return make_int(span, v.int_value());
  if (v.is_atom()) return make_atom(span, v.atom_name());
  static const Symbol cons = Symbol::intern("cons");
  return make_call(span, cons,
                   {embed_value(v.head(), span), embed_value(v.tail(), span)});
}

ExprPtr substitute(const ExprPtr& expr, const Substitution& sub) {
  const Expr& e = *expr;
  return std::visit(
      [&](const auto& node) -> ExprPtr {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, LitExpr>) {
          return expr;
        } else if constexpr (std::is_same_v<T, VarExpr>) {
          const Value* v = sub.lookup(node.name);
          if (!v) throw UnboundVariableError(node.name);
          return embed_value(*v, e.span);
        } else if constexpr (std::is_same_v<T, CallExpr>) {
          std::vector<ExprPtr> args;
          args.reserve(node.args.size());
          bool changed = false;
          for (const ExprPtr& a : node.args) {
            args.push_back(substitute(a, sub));
            changed |= args.back() != a;
          }
          if (!changed) return expr;
          return make_call(e.span, node.fname, std::move(args));
        } else if constexpr (std::is_same_v<T, ChoiceExpr>) {
          std::vector<ExprPtr> branches;
          branches.reserve(node.branches.size());
          bool changed = false;
          for (const ExprPtr& b : node.branches) {
            branches.push_back(substitute(b, sub));
            changed |= branches.back() != b;
          }
          if (!changed) return expr;
          return make_choice(e.span, std::move(branches));
        } else {
          ExprPtr cond = substitute(node.cond, sub);
          ExprPtr then_arm = substitute(node.then_arm, sub);
          ExprPtr else_arm = substitute(node.else_arm, sub);
          if (cond == node.cond && then_arm == node.then_arm &&
              else_arm == node.else_arm) {
            return expr;
          }
          return make_if(e.span, std::move(cond), std::move(then_arm),
                         std::move(else_arm));
        }
      },
      e.node);
}

// ----------------------------------------------------------------------------
// Evaluator
// ----------------------------------------------------------------------------

namespace {

class Evaluator {
 public:
  Evaluator(const Program& program, const Limits& limits, Trace* trace)
      : program_(program), limits_(limits), trace_(trace) {}

  // Evaluation phase, rules 5-8. `depth` counts nested dispatches.
  Outcome eval_expr(const Expr& e, int depth) {
    return std::visit(
        [&](const auto& node) -> Outcome {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, LitExpr>) {
            // Rule 7: a constant evaluates to itself.
            if (tracing() &&
                !emit(7, Phase::Eval, depth, EventTag::Succeed,
                      pretty(node.value))) {
              return trace_limit_error(e);
            }
            return Outcome::success(Value::from_literal(node.value));
          } else if constexpr (std::is_same_v<T, VarExpr>) {
            return Outcome::hard_error(
                HardErrorKind::UnboundVariable,
                "unbound variable '" + node.name.str() + "'",
                provenance(e.span, node.name.str()));
          } else if constexpr (std::is_same_v<T, CallExpr>) {
            return eval_call(e, node, depth);
          } else if constexpr (std::is_same_v<T, ChoiceExpr>) {
            return eval_choice(e, node, depth);
          } else {
            return eval_if(node, depth);
          }
        },
        e.node);
  }

  // Backchaining phase, rules 1-4: walk the clause conjunction in textual
  // order; a matching clause whose body soft-fails does not doom the call.
  Outcome backchain_call(const std::vector<Clause>& candidates, Symbol fname,
                         const std::vector<Value>& args, Span call_site,
                         const std::string& ground_subject, int depth) {
    const size_t m = candidates.size();
    std::optional<Outcome> last_soft;
    bool any_matched = false;

    for (size_t k = 0; k < m; ++k) {
      const Clause& clause = candidates[k];
      if (tracing()) {
        // Rules 3/2: descend into the rest, select the leaf.
        if (k > 0 && !emit(3, Phase::Backchain, depth, EventTag::Enter,
                           pretty_head(clause))) {
          return trace_limit_error_at(call_site, ground_subject);
        }
        if (m - k >= 2 && !emit(2, Phase::Backchain, depth, EventTag::Enter,
                                pretty_head(clause))) {
          return trace_limit_error_at(call_site, ground_subject);
        }
      }
      if (clause.fname != fname || clause.params.size() != args.size()) {
        continue;
      }
      std::optional<Substitution> sub = match_head(clause, args);
      if (!sub) continue;
      any_matched = true;

      if (tracing()) {
        // Rule 4 passes arguments when the head binds variables; rule 1
        // switches the instantiated clause to evaluation mode.
        if (clause.has_var_params() &&
            !emit(4, Phase::Backchain, depth, EventTag::Enter,
                  pretty_head(clause))) {
          return trace_limit_error_at(call_site, ground_subject);
        }
        if (!emit(1, Phase::Backchain, depth, EventTag::Enter,
                  ground_subject)) {
          return trace_limit_error_at(call_site, ground_subject);
        }
      }

      ExprPtr body;
      try {
        body = substitute(clause.body, *sub);
      } catch (const UnboundVariableError& ex) {
        return Outcome::hard_error(HardErrorKind::UnboundVariable, ex.what(),
                                   provenance(call_site, ground_subject));
      }
      Outcome out = eval_expr(*body, depth);
      if (out.is_success() || out.is_hard_error()) return out;
      last_soft = std::move(out);
    }

    if (!any_matched) {
      return Outcome::soft_fail(FailReason::NoMatchingClause,
                                provenance(call_site, ground_subject));
    }
    return *last_soft;
  }

 private:
  // --------------------------------------------------------------------

  Outcome eval_call(const Expr& e, const CallExpr& call, int depth) {
    const size_t n = call.args.size();

    // Rule 6: evaluate the arguments first, left to right, fail-fast.
    if (n > 0 && tracing() &&
        !emit(6, Phase::Eval, depth, EventTag::Enter, pretty(e))) {
      return trace_limit_error(e);
    }
    std::vector<Value> args;
    args.reserve(n);
    for (const ExprPtr& a : call.args) {
      Outcome o = eval_expr(*a, depth);
      if (o.is_hard_error()) return o;
      if (!o.is_success()) {
        if (tracing() &&
            !emit(6, Phase::Eval, depth, EventTag::Fail, pretty(e))) {
          return trace_limit_error(e);
        }
        return o;
      }
      args.push_back(o.value());
    }

    std::string ground = ground_subject(call.fname, args, e.span);
    Outcome out = dispatch(e, call.fname, std::move(args), ground, depth);
    if (out.is_hard_error()) return out;
    if (n > 0 && tracing() &&
        !emit(6, Phase::Eval, depth,
              out.is_success() ? EventTag::Succeed : EventTag::Fail,
              pretty(e))) {
      return trace_limit_error(e);
    }
    return out;
  }

  // The ground call h(c1, ..., cn): primitives apply directly, anything else
  // switches to backchaining (rule 5).
  Outcome dispatch(const Expr& e, Symbol fname, std::vector<Value> args,
                   const std::string& ground, int depth) {
    if (const BuiltinEntry* entry = find_builtin(fname, args.size())) {
      Outcome out =
          entry->apply(args).with_provenance(provenance(e.span, ground));
      if (tracing() &&
          !emit(5, Phase::Eval, depth,
                out.is_success() ? EventTag::Succeed : EventTag::Fail,
                ground)) {
        return trace_limit_error(e);
      }
      return out;
    }
    if (is_builtin_name(fname)) {
      // No primitive of this arity exists and user clauses cannot shadow
      // builtin names, so the call is unresolvable.
      Outcome out = Outcome::soft_fail(FailReason::NoMatchingClause,
                                       provenance(e.span, ground));
      if (tracing() &&
          !emit(5, Phase::Eval, depth, EventTag::Fail, ground)) {
        return trace_limit_error(e);
      }
      return out;
    }

    if (tracing() && !emit(5, Phase::Eval, depth, EventTag::Enter, ground)) {
      return trace_limit_error(e);
    }
    if (depth + 1 > limits_.max_call_depth) {
      return Outcome::hard_error(
          HardErrorKind::DepthExceeded,
          "call depth limit " + std::to_string(limits_.max_call_depth) +
              " exceeded",
          provenance(e.span, ground));
    }
    Outcome out = backchain_call(program_.clauses(), fname, args, e.span,
                                 ground, depth + 1);
    if (out.is_hard_error()) return out;
    if (tracing() &&
        !emit(5, Phase::Eval, depth,
              out.is_success() ? EventTag::Succeed : EventTag::Fail,
              ground)) {
      return trace_limit_error(e);
    }
    return out;
  }

  // Rule 8: commit to the first successful branch; soft failures fall
  // through, hard errors abort the whole choice.
  Outcome eval_choice(const Expr& e, const ChoiceExpr& choice, int depth) {
    if (choice.branches.size() >
        static_cast<size_t>(limits_.max_choice_width)) {
      return Outcome::hard_error(
          HardErrorKind::ChoiceWidthExceeded,
          "choice width " + std::to_string(choice.branches.size()) +
              " exceeds limit " + std::to_string(limits_.max_choice_width),
          provenance(e.span, ""));
    }
    if (choice.branches.empty()) {
      return Outcome::hard_error(HardErrorKind::Internal, "empty choice",
                                 provenance(e.span, ""));
    }
    if (tracing() &&
        !emit(8, Phase::Eval, depth, EventTag::Enter, pretty(e))) {
      return trace_limit_error(e);
    }
    Outcome last;
    for (const ExprPtr& branch : choice.branches) {
      Outcome o = eval_expr(*branch, depth);
      if (o.is_hard_error()) return o;
      if (tracing() &&
          !emit(8, Phase::Eval, depth,
                o.is_success() ? EventTag::Succeed : EventTag::Fail,
                pretty(*branch))) {
        return trace_limit_error(e);
      }
      if (o.is_success()) return o;
      last = std::move(o);
    }
    return last;
  }

  // `if` is an extension without a rule number; it emits no events of its
  // own. Any successful non-boolean condition is a recoverable mistake.
  Outcome eval_if(const IfExpr& node, int depth) {
    Outcome cond = eval_expr(*node.cond, depth);
    if (!cond.is_success()) return cond;
    const Value& v = cond.value();
    if (v.is_atom() && v.atom_name() == atoms::true_()) {
      return eval_expr(*node.then_arm, depth);
    }
    if (v.is_atom() && v.atom_name() == atoms::false_()) {
      return eval_expr(*node.else_arm, depth);
    }
    return Outcome::soft_fail(
        FailReason::TypeMismatch,
        provenance(node.cond->span, pretty(*node.cond)));
  }

  // --------------------------------------------------------------------

  bool tracing() const { return trace_ != nullptr; }

  bool emit(int rule, Phase phase, int depth, EventTag tag,
            std::string subject) {
    if (trace_->events.size() >= limits_.max_trace_events) {
      trace_->truncated = true;
      return false;
    }
    trace_->events.push_back(
        TraceEvent{rule, phase, depth, tag, std::move(subject)});
    return true;
  }

  Outcome trace_limit_error(const Expr& e) {
    return trace_limit_error_at(e.span, pretty(e));
  }

  Outcome trace_limit_error_at(Span span, const std::string& subject) {
    return Outcome::hard_error(
        HardErrorKind::TraceLimitExceeded,
        "trace event limit " + std::to_string(limits_.max_trace_events) +
            " exceeded",
        provenance(span, subject));
  }

  static Provenance provenance(Span span, std::string subject) {
    return Provenance{span, std::move(subject)};
  }

  static std::string ground_subject(Symbol fname,
                                    const std::vector<Value>& args,
                                    Span span) {
    std::vector<ExprPtr> embedded;
    embedded.reserve(args.size());
    for (const Value& v : args) embedded.push_back(embed_value(v, span));
    return pretty(*make_call(span, fname, std::move(embedded)));
  }

  const Program& program_;
  const Limits& limits_;
  Trace* trace_;
};

}  // namespace

Outcome eval(const Program& program, const Expr& expr, const Limits& limits,
             Trace* trace) {
  return Evaluator(program, limits, trace).eval_expr(expr, 0);
}

Outcome backchain(const std::vector<Clause>& candidates,
                  const Program& program, Symbol fname,
                  const std::vector<Value>& args, Span call_site,
                  const Limits& limits, Trace* trace, int depth) {
  Evaluator ev(program, limits, trace);
  std::vector<ExprPtr> embedded;
  embedded.reserve(args.size());
  for (const Value& v : args) embedded.push_back(embed_value(v, call_site));
  std::string ground = pretty(*make_call(call_site, fname, std::move(embedded)));
  return ev.backchain_call(candidates, fname, args, call_site, ground, depth);
}

// ----------------------------------------------------------------------------
// run_main
// ----------------------------------------------------------------------------

namespace {

// Deep recursion is bounded by limits.max_call_depth, which defaults to
// 10000; give the evaluation a stack that comfortably covers it.
constexpr size_t kEvalStackBytes = size_t{512} * 1024 * 1024;

void run_on_big_stack(const std::function<void()>& fn) {
  struct Ctx {
    const std::function<void()>* fn;
    std::exception_ptr error;
  } ctx{&fn, nullptr};

  pthread_attr_t attr;
  if (pthread_attr_init(&attr) != 0 ||
      pthread_attr_setstacksize(&attr, kEvalStackBytes) != 0) {
    fn();  // fall back to the caller's stack
    return;
  }
  auto trampoline = [](void* arg) -> void* {
    Ctx* c = static_cast<Ctx*>(arg);
    try {
      (*c->fn)();
    } catch (...) {
      c->error = std::current_exception();
    }
    return nullptr;
  };
  pthread_t thread;
  if (pthread_create(&thread, &attr, trampoline, &ctx) != 0) {
    pthread_attr_destroy(&attr);
    fn();
    return;
  }
  pthread_join(thread, nullptr);
  pthread_attr_destroy(&attr);
  if (ctx.error) std::rethrow_exception(ctx.error);
}

}  // namespace

EvalRun run_main(const Program& program, const ExprPtr& entry,
                 const Limits& limits) {
  EvalRun run;
  run_on_big_stack([&] {
    run.outcome = eval(program, *entry, limits, &run.trace);
  });
  return run;
}

}  // namespace funcadd
