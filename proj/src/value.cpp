#include "funcadd/value.hpp"

namespace funcadd {

Value Value::cons(Value head, Value tail) {
  return Value(Repr(std::make_shared<const Cons>(
      Cons{std::move(head), std::move(tail)})));
}

Value Value::from_literal(const Literal& lit) {
  return lit.is_int() ? integer(lit.int_value()) : atom(lit.atom_name());
}

bool Value::is_cons() const {
  return std::holds_alternative<std::shared_ptr<const Cons>>(repr_);
}

const Value& Value::head() const {
  return std::get<std::shared_ptr<const Cons>>(repr_)->head;
}

const Value& Value::tail() const {
  return std::get<std::shared_ptr<const Cons>>(repr_)->tail;
}

bool operator==(const Value& a, const Value& b) {
  const Value* x = &a;
  const Value* y = &b;
  // Spine iteratively, heads recursively: long lists stay cheap.
  for (;;) {
    if (x->repr_.index() != y->repr_.index()) return false;
    if (x->is_int()) return x->int_value() == y->int_value();
    if (x->is_atom()) return x->atom_name() == y->atom_name();
    const auto& xc = std::get<std::shared_ptr<const Value::Cons>>(x->repr_);
    const auto& yc = std::get<std::shared_ptr<const Value::Cons>>(y->repr_);
    if (xc == yc) return true;
    if (!(xc->head == yc->head)) return false;
    x = &xc->tail;
    y = &yc->tail;
  }
}

}  // namespace funcadd
