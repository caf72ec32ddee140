#include <doctest.h>

#include <cstdint>

#include "funcadd/eval.hpp"
#include "funcadd/parser.hpp"
#include "funcadd/pretty.hpp"
#include "generators.hpp"

using namespace funcadd;

namespace {

Symbol sym(const char* s) { return Symbol::intern(s); }

Outcome eval_text(const char* program, const char* entry,
                  Limits limits = {}, Trace* trace = nullptr) {
  Program p = parse_program_text(program);
  ExprPtr e = parse_entry_text(entry);
  return eval(p, *e, limits, trace);
}

}  // namespace

TEST_CASE("the div example recovers with the fallback constant") {
  Outcome o = eval_text("div(x,y) = (x/y) ++ infinity", "div(4, 0)");
  REQUIRE(o.is_success());
  CHECK(o.value() == Value::atom(sym("infinity")));
  // And takes the first branch when it succeeds.
  CHECK(eval_text("div(x,y) = (x/y) ++ infinity", "div(4, 2)").value() ==
        Value::integer(2));
}

TEST_CASE("a constant evaluates to itself in any program") {
  CHECK(eval_text("", "42").value() == Value::integer(42));
  CHECK(eval_text("f() = 1", "42").value() == Value::integer(42));
  CHECK(eval_text("", "infinity").value() == Value::atom(sym("infinity")));
}

TEST_CASE("fact(5) is 120") {
  const char* fact = "fact(0) = 1; fact(n) = n * fact(n - 1)";
  std::int64_t expected = 1;
  for (std::int64_t i = 2; i <= 5; ++i) expected *= i;
  CHECK(eval_text(fact, "fact(5)").value() == Value::integer(expected));
  CHECK(eval_text(fact, "fact(0)").value() == Value::integer(1));
}

TEST_CASE("choice skips failing branches") {
  CHECK(eval_text("", "fail ++ 7").value() == Value::integer(7));
  CHECK(eval_text("", "(1/0) ++ (2+3)").value() == Value::integer(5));
  // All branches failing reports the last branch's failure.
  Outcome o = eval_text("", "(1/0) ++ fail");
  REQUIRE(o.is_soft_fail());
  CHECK(o.reason() == FailReason::ExplicitFail);
}

TEST_CASE("calling an undefined function is a recoverable failure") {
  Outcome o = eval_text("fact(0) = 1; fact(n) = n * fact(n - 1)",
                        "undefinedfn(3)");
  REQUIRE(o.is_soft_fail());
  CHECK(o.reason() == FailReason::NoMatchingClause);
  CHECK(o.where().subject == "undefinedfn(3)");
}

TEST_CASE("backchaining commits to the first matching clause that succeeds") {
  Trace trace;
  Program p = parse_program_text("fact(0) = 1; fact(n) = n * fact(n - 1)");
  Outcome o = eval(p, *parse_entry_text("fact(0)"), {}, &trace);
  CHECK(o.value() == Value::integer(1));
  // The second clause is never entered: no rule-4 event for fact(n).
  for (const TraceEvent& e : trace.events) {
    CHECK(e.rule != 4);
    if (e.rule == 3) FAIL("scan moved past the first clause");
  }
}

TEST_CASE("deep backtracking: a failing body does not doom the call") {
  const char* p = "pick(x) = fail; pick(x) = x";
  CHECK(eval_text(p, "pick(7)").value() == Value::integer(7));
  // All matching bodies failing reports the last body's failure.
  Outcome o = eval_text("f(x) = 1/0; f(x) = head(nil)", "f(1)");
  REQUIRE(o.is_soft_fail());
  CHECK(o.reason() == FailReason::EmptyListAccess);
}

TEST_CASE("plan cascade over missing modules") {
  Program p = parse_program_text(
      "sort(x) = heapsort(x) ++ quicksort(x) ++ bubblesort(x);"
      "bubblesort(xs) = xs");
  Trace trace;
  Outcome o = eval(p, *parse_entry_text("sort([3, 100, 40, 2])"), {}, &trace);
  REQUIRE(o.is_success());
  int fails = 0;
  for (const TraceEvent& e : trace.events) {
    if (e.rule == 8 && e.tag == EventTag::Fail) ++fails;
  }
  CHECK(fails == 2);  // heapsort and quicksort branches
}

TEST_CASE("argument evaluation is left to right and fail-fast") {
  Trace trace;
  Program p = parse_program_text("g(a, b) = a");
  Outcome o = eval(p, *parse_entry_text("g(fail, 42)"), {}, &trace);
  REQUIRE(o.is_soft_fail());
  CHECK(o.reason() == FailReason::ExplicitFail);
  for (const TraceEvent& e : trace.events) {
    CHECK(e.subject != "42");  // the second argument is never evaluated
    CHECK((e.rule != 5 || e.tag != EventTag::Enter));  // no dispatch
  }
}

TEST_CASE("if selects lazily on boolean atoms") {
  CHECK(eval_text("", "if 1 < 2 then 10 else 1/0").value() ==
        Value::integer(10));
  CHECK(eval_text("", "if 2 < 1 then 1/0 else 20").value() ==
        Value::integer(20));
  Trace trace;
  Program empty;
  eval(empty, *parse_entry_text("if true then 1 else 1/0"), {}, &trace);
  for (const TraceEvent& e : trace.events) CHECK(e.subject != "1 / 0");

  Outcome bad = eval_text("", "if 42 then 1 else 2");
  REQUIRE(bad.is_soft_fail());
  CHECK(bad.reason() == FailReason::TypeMismatch);
  // A non-boolean condition is recoverable.
  CHECK(eval_text("", "(if 42 then 1 else 2) ++ 9").value() ==
        Value::integer(9));
  // A failing condition propagates.
  CHECK(eval_text("", "if fail then 1 else 2").reason() ==
        FailReason::ExplicitFail);
}

TEST_CASE("match_head on constants, variables, and mixed positions") {
  Program p = parse_program_text(
      "fact(0) = 1; fact(n) = n; g(x, 0) = x; h(nil, y) = y");
  const Clause& fact0 = p.clauses()[0];
  const Clause& factn = p.clauses()[1];
  const Clause& g = p.clauses()[2];
  const Clause& h = p.clauses()[3];

  auto sub = match_head(fact0, {Value::integer(0)});
  REQUIRE(sub.has_value());
  CHECK(sub->empty());

  sub = match_head(factn, {Value::integer(3)});
  REQUIRE(sub.has_value());
  REQUIRE(sub->size() == 1);
  CHECK(*sub->lookup(sym("n")) == Value::integer(3));

  CHECK(!match_head(fact0, {Value::integer(1)}).has_value());
  CHECK(!match_head(fact0, {Value::integer(0), Value::integer(0)}).has_value());

  sub = match_head(g, {Value::integer(5), Value::integer(0)});
  REQUIRE(sub.has_value());
  CHECK(*sub->lookup(sym("x")) == Value::integer(5));
  CHECK(!match_head(g, {Value::integer(5), Value::integer(1)}).has_value());

  sub = match_head(h, {Value::atom(atoms::nil()), Value::integer(9)});
  REQUIRE(sub.has_value());
  CHECK(!match_head(h, {Value::integer(0), Value::integer(9)}).has_value());
}

TEST_CASE("substitution instantiates clause bodies") {
  Program p = parse_program_text("div(x, y) = (x / y) ++ infinity");
  Substitution sub;
  sub.bind(sym("x"), Value::integer(4));
  sub.bind(sym("y"), Value::integer(0));
  ExprPtr body = substitute(p.clauses()[0].body, sub);
  CHECK(pretty(body) == "4 / 0 ++ infinity");
  CHECK(*body == *parse_entry_text("(4 / 0) ++ infinity"));

  // No variables: the expression comes back unchanged (same node).
  ExprPtr seven = parse_entry_text("7");
  CHECK(substitute(seven, Substitution{}) == seven);

  Program q = parse_program_text("fact(n) = n * fact(n - 1)");
  Substitution s5;
  s5.bind(sym("n"), Value::integer(5));
  ExprPtr inst = substitute(q.clauses()[0].body, s5);
  CHECK(pretty(inst) == "5 * fact(5 - 1)");
  CHECK(*inst == *parse_entry_text("5 * fact(5 - 1)"));

  // Cons values embed as ground constructor expressions.
  Substitution slist;
  slist.bind(sym("n"),
             Value::cons(Value::integer(1), Value::atom(atoms::nil())));
  ExprPtr chain = substitute(parse_expr_text("n"), slist);
  CHECK(*chain == *parse_entry_text("cons(1, nil)"));
}

TEST_CASE("a variable outside the substitution domain is a defect") {
  Substitution sub;
  sub.bind(sym("x"), Value::integer(1));
  CHECK_THROWS_AS(substitute(parse_expr_text("x + y"), sub),
                  UnboundVariableError);
  // A stray variable reaching the evaluator is a hard error, not a failure.
  Program empty;
  Outcome o = eval(empty, *make_var({}, sym("q")), {}, nullptr);
  REQUIRE(o.is_hard_error());
  CHECK(o.error_kind() == HardErrorKind::UnboundVariable);
}

TEST_CASE("divergence hits the depth limit, never loops") {
  Limits limits;
  limits.max_call_depth = 64;
  Outcome o = eval_text("loop() = loop()", "loop()", limits);
  REQUIRE(o.is_hard_error());
  CHECK(o.error_kind() == HardErrorKind::DepthExceeded);
  // Mutual recursion too.
  CHECK(eval_text("even(n) = odd(n); odd(n) = even(n)", "even(0)", limits)
            .error_kind() == HardErrorKind::DepthExceeded);
}

TEST_CASE("a choice never catches hard errors") {
  Limits limits;
  limits.max_call_depth = 16;
  Outcome o = eval_text("loop() = loop()", "loop() ++ 1", limits);
  REQUIRE(o.is_hard_error());
  CHECK(o.error_kind() == HardErrorKind::DepthExceeded);
  o = eval_text("loop() = loop()", "(1/0) ++ loop() ++ 99", limits);
  REQUIRE(o.is_hard_error());
}

TEST_CASE("choice width beyond the limit is a hard error") {
  Limits limits;
  limits.max_choice_width = 8;
  std::vector<ExprPtr> branches;
  for (int i = 0; i < 9; ++i) {
    branches.push_back(make_call({}, sym("fail"), {}));
  }
  ExprPtr wide = make_choice({}, std::move(branches));
  Program empty;
  Outcome o = eval(empty, *wide, limits, nullptr);
  REQUIRE(o.is_hard_error());
  CHECK(o.error_kind() == HardErrorKind::ChoiceWidthExceeded);
}

TEST_CASE("trace exhaustion truncates with a marker and aborts hard") {
  Limits limits;
  limits.max_trace_events = 5;
  Program p = parse_program_text("fact(0) = 1; fact(n) = n * fact(n - 1)");
  Trace trace;
  Outcome o = eval(p, *parse_entry_text("fact(20)"), limits, &trace);
  REQUIRE(o.is_hard_error());
  CHECK(o.error_kind() == HardErrorKind::TraceLimitExceeded);
  CHECK(trace.truncated);
  CHECK(trace.events.size() == 5);
  // Without a sink the same program runs to completion.
  CHECK(eval(p, *parse_entry_text("fact(20)"), limits, nullptr).is_success());
}

TEST_CASE("builtin with the wrong arity cannot be resolved") {
  Outcome o = eval_text("", "head(1, 2)");
  REQUIRE(o.is_soft_fail());
  CHECK(o.reason() == FailReason::NoMatchingClause);
}

TEST_CASE("backchain scans an explicit candidate list") {
  Program p = parse_program_text("pick(0) = zero; pick(n) = fail; pick(n) = n");
  std::vector<Value> args = {Value::integer(7)};
  Outcome o = backchain(p.clauses(), p, sym("pick"), args, Span{1, 1}, {},
                        nullptr, 1);
  REQUIRE(o.is_success());
  CHECK(o.value() == Value::integer(7));

  // Restricting the candidates changes what is reachable.
  std::vector<Clause> only_first(p.clauses().begin(), p.clauses().begin() + 2);
  Outcome limited = backchain(only_first, p, sym("pick"), args, Span{1, 1}, {},
                              nullptr, 1);
  REQUIRE(limited.is_soft_fail());
  CHECK(limited.reason() == FailReason::ExplicitFail);

  std::vector<Clause> none;
  Outcome empty = backchain(none, p, sym("pick"), args, Span{1, 1}, {},
                            nullptr, 1);
  REQUIRE(empty.is_soft_fail());
  CHECK(empty.reason() == FailReason::NoMatchingClause);
}

TEST_CASE("run_main wraps eval with a fresh trace") {
  Program empty;
  EvalRun run = run_main(empty, parse_entry_text("5"));
  CHECK(run.outcome.value() == Value::integer(5));
  REQUIRE(run.trace.events.size() == 1);
  CHECK(run.trace.events[0].rule == 7);
  CHECK(run.trace.events[0].tag == EventTag::Succeed);
  CHECK(run.trace.events[0].subject == "5");
  CHECK(!run.trace.truncated);
}

TEST_CASE("run_main survives the default ten-thousand depth limit") {
  Program p = parse_program_text("loop() = loop()");
  EvalRun run = run_main(p, parse_entry_text("loop()"));
  REQUIRE(run.outcome.is_hard_error());
  CHECK(run.outcome.error_kind() == HardErrorKind::DepthExceeded);
  // Deep but terminating recursion also fits.
  Program count = parse_program_text("down(0) = 0; down(n) = down(n - 1)");
  Limits limits;
  limits.max_call_depth = 9000;
  EvalRun deep = run_main(count, parse_entry_text("down(8000)"), limits);
  CHECK(deep.outcome.value() == Value::integer(0));
}

TEST_CASE("soft failures carry source positions") {
  Program p = parse_program_text("div(x,y) = (x/y) ++ infinity");
  Outcome o = eval(p, *parse_entry_text("4 / 0"), {}, nullptr);
  REQUIRE(o.is_soft_fail());
  CHECK(o.where().subject == "4 / 0");
  CHECK(o.where().at.line == 1);
  // Inside a clause body the position points into the program source.
  Trace trace;
  Outcome fromBody = eval(p, *parse_entry_text("div(4, 0) ++ fail"), {}, &trace);
  CHECK(fromBody.is_success());
}
