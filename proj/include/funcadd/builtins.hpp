#pragma once

#include <vector>

#include "funcadd/ast.hpp"
#include "funcadd/outcome.hpp"
#include "funcadd/value.hpp"

namespace funcadd {

enum class BuiltinKind { Pure, Constructor };

struct BuiltinEntry {
  Symbol name;
  size_t arity;
  BuiltinKind kind;
  Outcome (*apply)(const std::vector<Value>& args);
};

const std::vector<BuiltinEntry>& builtin_table();

const BuiltinEntry* find_builtin(Symbol name, size_t arity);

// True for any name in the reserved set, regardless of arity. The parser
// rejects user clauses with these names.
bool is_builtin_name(Symbol name);

// Total: never a hard error, never diverges. Failures come back without
// provenance; the evaluator attaches the call site.
Outcome apply_builtin(Symbol name, const std::vector<Value>& args);

}  // namespace funcadd
