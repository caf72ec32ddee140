#pragma once

#include <cstdint>
#include <memory>
#include <variant>

#include "funcadd/ast.hpp"

namespace funcadd {

// A ground result value: integer, atom, or cons cell. Values are immutable;
// cells are shared freely.
class Value {
 public:
  struct Cons;

  Value() : repr_(std::int64_t{0}) {}

  static Value integer(std::int64_t v) { return Value(Repr(v)); }
  static Value atom(Symbol name) { return Value(Repr(name)); }
  static Value cons(Value head, Value tail);
  static Value from_literal(const Literal& lit);

  bool is_int() const { return std::holds_alternative<std::int64_t>(repr_); }
  bool is_atom() const { return std::holds_alternative<Symbol>(repr_); }
  bool is_cons() const;
  bool is_nil() const { return is_atom() && atom_name() == atoms::nil(); }

  std::int64_t int_value() const { return std::get<std::int64_t>(repr_); }
  Symbol atom_name() const { return std::get<Symbol>(repr_); }
  const Value& head() const;
  const Value& tail() const;

  // Structural equality; also the equality used by head matching and `==`.
  friend bool operator==(const Value& a, const Value& b);
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

 private:
  using Repr = std::variant<std::int64_t, Symbol, std::shared_ptr<const Cons>>;
  explicit Value(Repr repr) : repr_(std::move(repr)) {}
  Repr repr_;
};

struct Value::Cons {
  Value head;
  Value tail;
};

}  // namespace funcadd
