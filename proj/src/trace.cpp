#include "funcadd/trace.hpp"

namespace funcadd {

const char* to_string(Phase phase) {
  return phase == Phase::Eval ? "eval" : "bc";
}

const char* to_string(EventTag tag) {
  switch (tag) {
    case EventTag::Enter: return "Enter";
    case EventTag::Succeed: return "Succeed";
    case EventTag::Fail: return "Fail";
  }
  return "?";
}

std::string format_event(const TraceEvent& event) {
  std::string out = "R";
  out += std::to_string(event.rule);
  out += ' ';
  out += to_string(event.phase);
  out += " d=";
  out += std::to_string(event.depth);
  out += ' ';
  out += to_string(event.tag);
  out += " | ";
  out += event.subject;
  return out;
}

}  // namespace funcadd
