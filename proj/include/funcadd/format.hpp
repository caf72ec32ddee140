#pragma once

#include <string>

#include "funcadd/outcome.hpp"

namespace funcadd {

// The result line contract: `pretty(value)` on success,
// `failure: <reason> at <provenance>` on a soft failure,
// `error: <kind>: <message>[ at <provenance>]` on a hard error.
// Stable across releases; golden tests pin it.
std::string format_outcome(const Outcome& outcome);

std::string format_provenance(const Provenance& where);

// 0 success, 1 soft failure, 2 hard error.
int outcome_exit_code(const Outcome& outcome);

}  // namespace funcadd
