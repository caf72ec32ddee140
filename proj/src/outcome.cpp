#include "funcadd/outcome.hpp"

namespace funcadd {

const char* to_string(FailReason reason) {
  switch (reason) {
    case FailReason::NoMatchingClause: return "no-matching-clause";
    case FailReason::DivideByZero: return "divide-by-zero";
    case FailReason::IntegerOverflow: return "integer-overflow";
    case FailReason::EmptyListAccess: return "empty-list-access";
    case FailReason::TypeMismatch: return "type-mismatch";
    case FailReason::ExplicitFail: return "explicit-fail";
  }
  return "?";
}

const char* to_string(HardErrorKind kind) {
  switch (kind) {
    case HardErrorKind::DepthExceeded: return "depth-exceeded";
    case HardErrorKind::TraceLimitExceeded: return "trace-limit-exceeded";
    case HardErrorKind::ChoiceWidthExceeded: return "choice-width-exceeded";
    case HardErrorKind::UnboundVariable: return "unbound-variable";
    case HardErrorKind::Internal: return "internal";
  }
  return "?";
}

const Provenance& Outcome::where() const {
  static const Provenance none;
  if (const auto* s = std::get_if<Soft>(&repr_)) return s->where;
  if (const auto* h = std::get_if<Hard>(&repr_)) return h->where;
  return none;
}

Outcome Outcome::with_provenance(Provenance where) const {
  if (is_success() || !this->where().empty()) return *this;
  if (is_soft_fail()) return soft_fail(reason(), std::move(where));
  return hard_error(error_kind(), message(), std::move(where));
}

bool Outcome::same_observable(const Outcome& other) const {
  if (repr_.index() != other.repr_.index()) return false;
  if (is_success()) return value() == other.value();
  if (is_soft_fail()) return reason() == other.reason();
  return error_kind() == other.error_kind();
}

bool operator==(const Outcome& a, const Outcome& b) {
  return a.repr_ == b.repr_;
}

}  // namespace funcadd
