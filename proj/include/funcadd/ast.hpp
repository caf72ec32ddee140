#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "funcadd/token.hpp"

namespace funcadd {

// Interned symbol. Equality is a pointer compare; ordering is textual so
// containers iterate deterministically regardless of intern order.
class Symbol {
 public:
  Symbol() = default;
  static Symbol intern(std::string_view name);

  const std::string& str() const;
  bool valid() const { return ptr_ != nullptr; }

  friend bool operator==(Symbol a, Symbol b) { return a.ptr_ == b.ptr_; }
  friend bool operator!=(Symbol a, Symbol b) { return a.ptr_ != b.ptr_; }
  friend bool operator<(Symbol a, Symbol b);

 private:
  explicit Symbol(const std::string* ptr) : ptr_(ptr) {}
  const std::string* ptr_ = nullptr;
};

// The conventional atoms. Plain symbols, not distinct types.
namespace atoms {
Symbol nil();
Symbol true_();
Symbol false_();
}  // namespace atoms

// A ground constant of the source syntax: integer or atom.
class Literal {
 public:
  static Literal integer(std::int64_t v) { return Literal(v); }
  static Literal atom(Symbol name) { return Literal(name); }

  bool is_int() const { return std::holds_alternative<std::int64_t>(repr_); }
  bool is_atom() const { return std::holds_alternative<Symbol>(repr_); }
  std::int64_t int_value() const { return std::get<std::int64_t>(repr_); }
  Symbol atom_name() const { return std::get<Symbol>(repr_); }

  friend bool operator==(const Literal&, const Literal&) = default;

 private:
  explicit Literal(std::int64_t v) : repr_(v) {}
  explicit Literal(Symbol s) : repr_(s) {}
  std::variant<std::int64_t, Symbol> repr_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct LitExpr {
  Literal value;
};

// A bare identifier. After name resolution only head-bound variables remain;
// the parser also uses this node provisionally for unresolved identifiers.
struct VarExpr {
  Symbol name;
};

struct CallExpr {
  Symbol fname;
  std::vector<ExprPtr> args;
};

// Sequential choice; branches are tried left to right. Kept flattened: no
// ChoiceExpr is a direct child of another (see make_choice).
struct ChoiceExpr {
  std::vector<ExprPtr> branches;
};

// Parser-level special form with lazy branches.
struct IfExpr {
  ExprPtr cond;
  ExprPtr then_arm;
  ExprPtr else_arm;
};

struct Expr {
  Span span;
  std::variant<LitExpr, VarExpr, CallExpr, ChoiceExpr, IfExpr> node;
};

ExprPtr make_lit(Span span, Literal value);
ExprPtr make_int(Span span, std::int64_t value);
ExprPtr make_atom(Span span, Symbol name);
ExprPtr make_var(Span span, Symbol name);
ExprPtr make_call(Span span, Symbol fname, std::vector<ExprPtr> args);
// Splices nested choices and collapses a single branch to the branch itself.
ExprPtr make_choice(Span span, std::vector<ExprPtr> branches);
ExprPtr make_if(Span span, ExprPtr cond, ExprPtr then_arm, ExprPtr else_arm);

// Structural equality; spans are metadata and do not participate.
bool operator==(const Expr& a, const Expr& b);
inline bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

// One clause-head parameter position: a binding variable or a constant.
class Param {
 public:
  static Param var(Symbol name) { return Param(name); }
  static Param constant(Literal lit) { return Param(lit); }

  bool is_var() const { return std::holds_alternative<Symbol>(repr_); }
  Symbol var_name() const { return std::get<Symbol>(repr_); }
  const Literal& literal() const { return std::get<Literal>(repr_); }

  friend bool operator==(const Param&, const Param&) = default;

 private:
  explicit Param(Symbol s) : repr_(s) {}
  explicit Param(Literal l) : repr_(l) {}
  std::variant<Symbol, Literal> repr_;
};

struct Clause {
  Symbol fname;
  std::vector<Param> params;
  ExprPtr body;
  Span span;

  bool has_var_params() const;
  friend bool operator==(const Clause& a, const Clause& b);
  friend bool operator!=(const Clause& a, const Clause& b) { return !(a == b); }
};

// An ordered clause list (textual order) with a derived (fname, arity) index.
class Program {
 public:
  Program() = default;

  void add_clause(Clause clause);
  const std::vector<Clause>& clauses() const { return clauses_; }
  size_t size() const { return clauses_.size(); }

  // Positions into clauses() of the clauses matching (fname, arity), in
  // textual order. Empty when the function is undefined.
  const std::vector<size_t>& clause_positions(Symbol fname, size_t arity) const;

  friend bool operator==(const Program& a, const Program& b) {
    return a.clauses_ == b.clauses_;
  }

 private:
  std::vector<Clause> clauses_;
  std::map<std::pair<Symbol, size_t>, std::vector<size_t>> index_;
};

}  // namespace funcadd
