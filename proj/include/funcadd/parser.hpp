#pragma once

#include <set>
#include <string_view>
#include <vector>

#include "funcadd/ast.hpp"
#include "funcadd/errors.hpp"
#include "funcadd/token.hpp"

namespace funcadd {

// Lexes the whole source; the returned sequence ends with an End token.
// Throws LexError on any character outside the language.
std::vector<Token> tokenize(std::string_view source);

// Parses a full program (clauses separated by `;`, trailing `;` permitted)
// and applies name resolution to every clause. Throws ParseError.
Program parse_program(const std::vector<Token>& tokens);
Program parse_program_text(std::string_view source);

// Parses a single expression spanning the whole token sequence. Identifiers
// come back unresolved (VarExpr); see resolve_expr.
ExprPtr parse_expr(const std::vector<Token>& tokens);
ExprPtr parse_expr_text(std::string_view source);

// Rewrites body identifiers: a head parameter name stays a variable, anything
// else becomes an atom literal. Total.
Clause resolve_names(Clause clause);
ExprPtr resolve_expr(const ExprPtr& expr, const std::set<Symbol>& params);

// Parses and resolves an entry expression against an empty head (closed).
ExprPtr parse_entry_text(std::string_view source);

}  // namespace funcadd
