#include "funcadd/builtins.hpp"

#include <cstdint>
#include <limits>

namespace funcadd {

namespace {

Outcome ok_int(std::int64_t v) { return Outcome::success(Value::integer(v)); }

Outcome ok_bool(bool b) {
  return Outcome::success(Value::atom(b ? atoms::true_() : atoms::false_()));
}

Outcome soft(FailReason reason) { return Outcome::soft_fail(reason); }

bool both_ints(const std::vector<Value>& args) {
  return args[0].is_int() && args[1].is_int();
}

Outcome bi_add(const std::vector<Value>& a) {
  if (!both_ints(a)) return soft(FailReason::TypeMismatch);
  std::int64_t r;
  if (__builtin_add_overflow(a[0].int_value(), a[1].int_value(), &r)) {
    return soft(FailReason::IntegerOverflow);
  }
  return ok_int(r);
}

Outcome bi_sub(const std::vector<Value>& a) {
  if (!both_ints(a)) return soft(FailReason::TypeMismatch);
  std::int64_t r;
  if (__builtin_sub_overflow(a[0].int_value(), a[1].int_value(), &r)) {
    return soft(FailReason::IntegerOverflow);
  }
  return ok_int(r);
}

Outcome bi_mul(const std::vector<Value>& a) {
  if (!both_ints(a)) return soft(FailReason::TypeMismatch);
  std::int64_t r;
  if (__builtin_mul_overflow(a[0].int_value(), a[1].int_value(), &r)) {
    return soft(FailReason::IntegerOverflow);
  }
  return ok_int(r);
}

// Truncated toward zero; INT64_MIN / -1 does not fit.
Outcome bi_div(const std::vector<Value>& a) {
  if (!both_ints(a)) return soft(FailReason::TypeMismatch);
  std::int64_t x = a[0].int_value();
  std::int64_t y = a[1].int_value();
  if (y == 0) return soft(FailReason::DivideByZero);
  if (x == std::numeric_limits<std::int64_t>::min() && y == -1) {
    return soft(FailReason::IntegerOverflow);
  }
  return ok_int(x / y);
}

// Remainder takes the dividend's sign; INT64_MIN mod -1 is 0.
Outcome bi_mod(const std::vector<Value>& a) {
  if (!both_ints(a)) return soft(FailReason::TypeMismatch);
  std::int64_t x = a[0].int_value();
  std::int64_t y = a[1].int_value();
  if (y == 0) return soft(FailReason::DivideByZero);
  if (y == -1) return ok_int(0);
  return ok_int(x % y);
}

Outcome bi_eq(const std::vector<Value>& a) { return ok_bool(a[0] == a[1]); }

Outcome bi_ne(const std::vector<Value>& a) { return ok_bool(a[0] != a[1]); }

template <typename Cmp>
Outcome int_cmp(const std::vector<Value>& a, Cmp cmp) {
  if (!both_ints(a)) return soft(FailReason::TypeMismatch);
  return ok_bool(cmp(a[0].int_value(), a[1].int_value()));
}

Outcome bi_lt(const std::vector<Value>& a) {
  return int_cmp(a, [](std::int64_t x, std::int64_t y) { return x < y; });
}
Outcome bi_le(const std::vector<Value>& a) {
  return int_cmp(a, [](std::int64_t x, std::int64_t y) { return x <= y; });
}
Outcome bi_gt(const std::vector<Value>& a) {
  return int_cmp(a, [](std::int64_t x, std::int64_t y) { return x > y; });
}
Outcome bi_ge(const std::vector<Value>& a) {
  return int_cmp(a, [](std::int64_t x, std::int64_t y) { return x >= y; });
}

Outcome bi_cons(const std::vector<Value>& a) {
  return Outcome::success(Value::cons(a[0], a[1]));
}

Outcome bi_head(const std::vector<Value>& a) {
  if (!a[0].is_cons()) return soft(FailReason::EmptyListAccess);
  return Outcome::success(a[0].head());
}

Outcome bi_tail(const std::vector<Value>& a) {
  if (!a[0].is_cons()) return soft(FailReason::EmptyListAccess);
  return Outcome::success(a[0].tail());
}

Outcome bi_fail(const std::vector<Value>&) {
  return soft(FailReason::ExplicitFail);
}

std::vector<BuiltinEntry> make_table() {
  auto entry = [](const char* name, size_t arity, BuiltinKind kind,
                  Outcome (*apply)(const std::vector<Value>&)) {
    return BuiltinEntry{Symbol::intern(name), arity, kind, apply};
  };
  return {
      entry("+", 2, BuiltinKind::Pure, bi_add),
      entry("-", 2, BuiltinKind::Pure, bi_sub),
      entry("*", 2, BuiltinKind::Pure, bi_mul),
      entry("/", 2, BuiltinKind::Pure, bi_div),
      entry("mod", 2, BuiltinKind::Pure, bi_mod),
      entry("==", 2, BuiltinKind::Pure, bi_eq),
      entry("!=", 2, BuiltinKind::Pure, bi_ne),
      entry("<", 2, BuiltinKind::Pure, bi_lt),
      entry("<=", 2, BuiltinKind::Pure, bi_le),
      entry(">", 2, BuiltinKind::Pure, bi_gt),
      entry(">=", 2, BuiltinKind::Pure, bi_ge),
      entry("cons", 2, BuiltinKind::Constructor, bi_cons),
      entry("head", 1, BuiltinKind::Pure, bi_head),
      entry("tail", 1, BuiltinKind::Pure, bi_tail),
      entry("fail", 0, BuiltinKind::Pure, bi_fail),
  };
}

}  // namespace

const std::vector<BuiltinEntry>& builtin_table() {
  static const std::vector<BuiltinEntry> table = make_table();
  return table;
}

const BuiltinEntry* find_builtin(Symbol name, size_t arity) {
  for (const BuiltinEntry& e : builtin_table()) {
    if (e.name == name && e.arity == arity) return &e;
  }
  return nullptr;
}

bool is_builtin_name(Symbol name) {
  for (const BuiltinEntry& e : builtin_table()) {
    if (e.name == name) return true;
  }
  return false;
}

Outcome apply_builtin(Symbol name, const std::vector<Value>& args) {
  const BuiltinEntry* entry = find_builtin(name, args.size());
  if (!entry) {
    return Outcome::hard_error(HardErrorKind::Internal,
                               "no builtin '" + name.str() + "' of arity " +
                                   std::to_string(args.size()));
  }
  return entry->apply(args);
}

}  // namespace funcadd
