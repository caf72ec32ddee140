#include "funcadd/format.hpp"

#include "funcadd/pretty.hpp"

namespace funcadd {

std::string format_provenance(const Provenance& where) {
  std::string out;
  if (where.at.known()) {
    out += std::to_string(where.at.line);
    out += ':';
    out += std::to_string(where.at.col);
  }
  if (!where.subject.empty()) {
    if (!out.empty()) out += ' ';
    out += '(';
    out += where.subject;
    out += ')';
  }
  if (out.empty()) out = "<unknown>";
  return out;
}

std::string format_outcome(const Outcome& outcome) {
  if (outcome.is_success()) return pretty(outcome.value());
  if (outcome.is_soft_fail()) {
    return std::string("failure: ") + to_string(outcome.reason()) + " at " +
           format_provenance(outcome.where());
  }
  std::string out = std::string("error: ") + to_string(outcome.error_kind()) +
                    ": " + outcome.message();
  if (!outcome.where().empty()) {
    out += " at ";
    out += format_provenance(outcome.where());
  }
  return out;
}

int outcome_exit_code(const Outcome& outcome) {
  if (outcome.is_success()) return 0;
  return outcome.is_soft_fail() ? 1 : 2;
}

}  // namespace funcadd
