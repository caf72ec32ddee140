#include <doctest.h>

#include <cstdint>
#include <limits>
#include <vector>

#include "funcadd/builtins.hpp"
#include "funcadd/eval.hpp"
#include "generators.hpp"

using namespace funcadd;

namespace {

Symbol sym(const char* s) { return Symbol::intern(s); }

Outcome apply(const char* name, std::vector<Value> args) {
  return apply_builtin(sym(name), args);
}

Value iv(std::int64_t v) { return Value::integer(v); }

// Wide-integer reference for the five arithmetic primitives.
Outcome arith_reference(const char* op, std::int64_t a, std::int64_t b) {
  std::string o = op;
  if ((o == "/" || o == "mod") && b == 0) {
    return Outcome::soft_fail(FailReason::DivideByZero);
  }
  __int128 r;
  if (o == "+") r = static_cast<__int128>(a) + b;
  else if (o == "-") r = static_cast<__int128>(a) - b;
  else if (o == "*") r = static_cast<__int128>(a) * b;
  else if (o == "/") r = static_cast<__int128>(a) / b;
  else r = static_cast<__int128>(a) - (static_cast<__int128>(a) / b) * b;
  if (r < std::numeric_limits<std::int64_t>::min() ||
      r > std::numeric_limits<std::int64_t>::max()) {
    return Outcome::soft_fail(FailReason::IntegerOverflow);
  }
  return Outcome::success(iv(static_cast<std::int64_t>(r)));
}

}  // namespace

TEST_CASE("division by zero is the canonical soft failure") {
  Outcome o = apply("/", {iv(4), iv(0)});
  REQUIRE(o.is_soft_fail());
  CHECK(o.reason() == FailReason::DivideByZero);
}

TEST_CASE("basic arithmetic rows") {
  CHECK(apply("+", {iv(2), iv(3)}) == Outcome::success(iv(5)));
  CHECK(apply("/", {iv(7), iv(2)}) == Outcome::success(iv(3)));
  // Truncation toward zero; remainder takes the dividend's sign.
  CHECK(apply("/", {iv(-7), iv(2)}) == Outcome::success(iv(-3)));
  CHECK(apply("mod", {iv(-7), iv(2)}) == Outcome::success(iv(-1)));
  CHECK(apply("mod", {iv(7), iv(-2)}) == Outcome::success(iv(1)));
}

TEST_CASE("arithmetic agrees with the wide-integer reference") {
  const char* ops[] = {"+", "-", "*", "/", "mod"};
  std::vector<std::int64_t> grid;
  for (std::int64_t v = -7; v <= 7; ++v) grid.push_back(v);
  for (std::int64_t v : {std::numeric_limits<std::int64_t>::min(),
                         std::numeric_limits<std::int64_t>::min() + 1,
                         std::numeric_limits<std::int64_t>::max() - 1,
                         std::numeric_limits<std::int64_t>::max()}) {
    grid.push_back(v);
  }
  for (const char* op : ops) {
    for (std::int64_t a : grid) {
      for (std::int64_t b : grid) {
        Outcome expected = arith_reference(op, a, b);
        Outcome actual = apply(op, {iv(a), iv(b)});
        CHECK_MESSAGE(actual.same_observable(expected), op, "(", a, ", ", b,
                      ")");
      }
    }
  }
}

TEST_CASE("overflow edges are recoverable failures") {
  auto max = std::numeric_limits<std::int64_t>::max();
  auto min = std::numeric_limits<std::int64_t>::min();
  CHECK(apply("+", {iv(max), iv(1)}).reason() == FailReason::IntegerOverflow);
  CHECK(apply("-", {iv(min), iv(1)}).reason() == FailReason::IntegerOverflow);
  CHECK(apply("*", {iv(min), iv(-1)}).reason() == FailReason::IntegerOverflow);
  CHECK(apply("/", {iv(min), iv(-1)}).reason() == FailReason::IntegerOverflow);
  CHECK(apply("mod", {iv(min), iv(-1)}) == Outcome::success(iv(0)));
}

TEST_CASE("arithmetic rejects non-integers softly") {
  Value atom = Value::atom(sym("infinity"));
  CHECK(apply("+", {atom, iv(1)}).reason() == FailReason::TypeMismatch);
  CHECK(apply("*", {iv(1), Value::cons(iv(1), iv(2))}).reason() ==
        FailReason::TypeMismatch);
  CHECK(apply("<", {atom, atom}).reason() == FailReason::TypeMismatch);
  CHECK(apply("<=", {iv(1), atom}).reason() == FailReason::TypeMismatch);
}

TEST_CASE("comparisons on integers") {
  CHECK(apply("<", {iv(1), iv(2)}).value() == Value::atom(atoms::true_()));
  CHECK(apply(">=", {iv(1), iv(2)}).value() == Value::atom(atoms::false_()));
}

TEST_CASE("structural equality builtin") {
  Value a = Value::cons(iv(1), Value::cons(iv(2), Value::atom(atoms::nil())));
  Value b = Value::cons(iv(1), Value::cons(iv(2), Value::atom(atoms::nil())));
  CHECK(apply("==", {a, b}).value() == Value::atom(atoms::true_()));
  CHECK(apply("!=", {a, b}).value() == Value::atom(atoms::false_()));
  CHECK(apply("==", {a, iv(1)}).value() == Value::atom(atoms::false_()));
  CHECK(apply("==", {Value::atom(sym("a")), Value::atom(sym("a"))}).value() ==
        Value::atom(atoms::true_()));
}

TEST_CASE("head and tail project cons cells only") {
  Outcome o = apply("head", {Value::atom(atoms::nil())});
  REQUIRE(o.is_soft_fail());
  CHECK(o.reason() == FailReason::EmptyListAccess);
  CHECK(apply("tail", {Value::atom(atoms::nil())}).reason() ==
        FailReason::EmptyListAccess);
  CHECK(apply("head", {iv(42)}).reason() == FailReason::EmptyListAccess);
  CHECK(apply("tail", {Value::atom(sym("foo"))}).reason() ==
        FailReason::EmptyListAccess);
}

TEST_CASE("constructor inverses hold for random values") {
  testgen::Rng rng(0xACCE55ull);
  for (int i = 0; i < 200; ++i) {
    Value h = testgen::gen_value(rng);
    Value t = testgen::gen_value(rng);
    Outcome cell = apply("cons", {h, t});
    REQUIRE(cell.is_success());
    CHECK(apply("head", {cell.value()}) == Outcome::success(h));
    CHECK(apply("tail", {cell.value()}) == Outcome::success(t));
  }
}

TEST_CASE("value equality is an equivalence relation") {
  testgen::Rng rng(0x5EEDull);
  std::vector<Value> values;
  for (int i = 0; i < 30; ++i) values.push_back(testgen::gen_value(rng));
  for (const Value& a : values) {
    CHECK(a == a);
    for (const Value& b : values) {
      CHECK((a == b) == (b == a));
      for (const Value& c : values) {
        if (a == b && b == c) CHECK(a == c);
      }
    }
  }
}

TEST_CASE("equality agrees with head matching") {
  testgen::Rng rng(0x1234ull);
  for (int i = 0; i < 100; ++i) {
    Literal lit = testgen::gen_literal(rng);
    Value v = testgen::gen_value(rng, 1);
    Clause clause{sym("p"), {Param::constant(lit)}, make_int({}, 0), {}};
    bool matches = match_head(clause, {v}).has_value();
    CHECK(matches == (Value::from_literal(lit) == v));
  }
}

TEST_CASE("fail is an explicit soft failure") {
  Outcome o = apply("fail", {});
  REQUIRE(o.is_soft_fail());
  CHECK(o.reason() == FailReason::ExplicitFail);
}

TEST_CASE("builtins never raise hard errors at registered arity") {
  testgen::Rng rng(0xD15Cull);
  for (const BuiltinEntry& entry : builtin_table()) {
    for (int i = 0; i < 50; ++i) {
      std::vector<Value> args;
      for (size_t a = 0; a < entry.arity; ++a) {
        args.push_back(testgen::gen_value(rng));
      }
      CHECK(!entry.apply(args).is_hard_error());
    }
  }
}

TEST_CASE("the reserved name set is exactly the builtin table") {
  for (const char* name : {"+", "-", "*", "/", "mod", "==", "!=", "<", "<=",
                           ">", ">=", "cons", "head", "tail", "fail"}) {
    CHECK(is_builtin_name(sym(name)));
  }
  CHECK(!is_builtin_name(sym("nil")));
  CHECK(!is_builtin_name(sym("true")));
  CHECK(!is_builtin_name(sym("false")));
  CHECK(!is_builtin_name(sym("main")));
  CHECK(find_builtin(sym("head"), 2) == nullptr);
  CHECK(find_builtin(sym("cons"), 2) != nullptr);
  CHECK(find_builtin(sym("cons"), 2)->kind == BuiltinKind::Constructor);
}
