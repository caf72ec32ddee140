#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace funcadd {

enum class Phase { Eval, Backchain };
enum class EventTag { Enter, Succeed, Fail };

// One applied rule. Rules 5-8 belong to the evaluation phase, rules 1-4 to
// backchaining; depth counts nested function dispatches.
struct TraceEvent {
  int rule = 0;
  Phase phase = Phase::Eval;
  int depth = 0;
  EventTag tag = EventTag::Enter;
  std::string subject;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct Trace {
  std::vector<TraceEvent> events;
  bool truncated = false;

  friend bool operator==(const Trace&, const Trace&) = default;
};

// Stable line format: `R<rule> <phase> d=<depth> <Enter|Succeed|Fail> | <subject>`
std::string format_event(const TraceEvent& event);

const char* to_string(Phase phase);
const char* to_string(EventTag tag);

}  // namespace funcadd
