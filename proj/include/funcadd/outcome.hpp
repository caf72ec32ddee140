#pragma once

#include <string>
#include <utility>
#include <variant>

#include "funcadd/token.hpp"
#include "funcadd/value.hpp"

namespace funcadd {

// Recoverable failures: exactly the class a sequential choice falls through.
enum class FailReason {
  NoMatchingClause,
  DivideByZero,
  IntegerOverflow,
  EmptyListAccess,
  TypeMismatch,
  ExplicitFail,
};

// Non-recoverable: resource exhaustion and internal faults. A choice never
// catches these.
enum class HardErrorKind {
  DepthExceeded,
  TraceLimitExceeded,
  ChoiceWidthExceeded,
  UnboundVariable,
  Internal,
};

const char* to_string(FailReason reason);
const char* to_string(HardErrorKind kind);

// Where an outcome arose: source position (when known) plus the offending
// redex in canonical text.
struct Provenance {
  Span at;
  std::string subject;

  bool empty() const { return !at.known() && subject.empty(); }
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

class Outcome {
 public:
  Outcome() : repr_(Value()) {}

  static Outcome success(Value v) { return Outcome(Repr(std::move(v))); }
  static Outcome soft_fail(FailReason reason, Provenance where = {}) {
    return Outcome(Repr(Soft{reason, std::move(where)}));
  }
  static Outcome hard_error(HardErrorKind kind, std::string message,
                            Provenance where = {}) {
    return Outcome(Repr(Hard{kind, std::move(message), std::move(where)}));
  }

  bool is_success() const { return std::holds_alternative<Value>(repr_); }
  bool is_soft_fail() const { return std::holds_alternative<Soft>(repr_); }
  bool is_hard_error() const { return std::holds_alternative<Hard>(repr_); }

  const Value& value() const { return std::get<Value>(repr_); }
  FailReason reason() const { return std::get<Soft>(repr_).reason; }
  HardErrorKind error_kind() const { return std::get<Hard>(repr_).kind; }
  const std::string& message() const { return std::get<Hard>(repr_).message; }
  const Provenance& where() const;

  // Fills in provenance on a failure that does not carry one yet.
  Outcome with_provenance(Provenance where) const;

  // Kind plus value / reason / error kind; ignores provenance and message.
  // This is the equality the differential oracle is held to.
  bool same_observable(const Outcome& other) const;

  friend bool operator==(const Outcome& a, const Outcome& b);
  friend bool operator!=(const Outcome& a, const Outcome& b) {
    return !(a == b);
  }

 private:
  struct Soft {
    FailReason reason;
    Provenance where;
    friend bool operator==(const Soft&, const Soft&) = default;
  };
  struct Hard {
    HardErrorKind kind;
    std::string message;
    Provenance where;
    friend bool operator==(const Hard&, const Hard&) = default;
  };
  using Repr = std::variant<Value, Soft, Hard>;
  explicit Outcome(Repr repr) : repr_(std::move(repr)) {}
  Repr repr_;
};

}  // namespace funcadd
