#include "funcadd/ast.hpp"

#include <mutex>
#include <unordered_set>

namespace funcadd {

// ----------------------------------------------------------------------------
// Symbol interning
// ----------------------------------------------------------------------------

namespace {

struct InternPool {
  std::mutex mutex;
  // Node-based container: element addresses are stable across rehashes.
  std::unordered_set<std::string> names;
};

InternPool& pool() {
  static InternPool instance;
  return instance;
}

}  // namespace

Symbol Symbol::intern(std::string_view name) {
  InternPool& p = pool();
  std::lock_guard<std::mutex> lock(p.mutex);
  auto [it, inserted] = p.names.emplace(name);
  return Symbol(&*it);
}

const std::string& Symbol::str() const {
  static const std::string empty;
  return ptr_ ? *ptr_ : empty;
}

bool operator<(Symbol a, Symbol b) {
  if (a.ptr_ == b.ptr_) return false;
  return a.str() < b.str();
}

namespace atoms {
Symbol nil() {
  static const Symbol s = Symbol::intern("nil");
  return s;
}
Symbol true_() {
  static const Symbol s = Symbol::intern("true");
  return s;
}
Symbol false_() {
  static const Symbol s = Symbol::intern("false");
  return s;
}
}  // namespace atoms

// ----------------------------------------------------------------------------
// Expression builders
// ----------------------------------------------------------------------------

ExprPtr make_lit(Span span, Literal value) {
  return std::make_shared<Expr>(Expr{span, LitExpr{value}});
}

ExprPtr make_int(Span span, std::int64_t value) {
  return make_lit(span, Literal::integer(value));
}

ExprPtr make_atom(Span span, Symbol name) {
  return make_lit(span, Literal::atom(name));
}

ExprPtr make_var(Span span, Symbol name) {
  return std::make_shared<Expr>(Expr{span, VarExpr{name}});
}

ExprPtr make_call(Span span, Symbol fname, std::vector<ExprPtr> args) {
  return std::make_shared<Expr>(Expr{span, CallExpr{fname, std::move(args)}});
}

ExprPtr make_choice(Span span, std::vector<ExprPtr> branches) {
  std::vector<ExprPtr> flat;
  flat.reserve(branches.size());
  for (ExprPtr& b : branches) {
    if (const auto* nested = std::get_if<ChoiceExpr>(&b->node)) {
      flat.insert(flat.end(), nested->branches.begin(),
                  nested->branches.end());
    } else {
      flat.push_back(std::move(b));
    }
  }
  if (flat.size() == 1) return flat.front();
  return std::make_shared<Expr>(Expr{span, ChoiceExpr{std::move(flat)}});
}

ExprPtr make_if(Span span, ExprPtr cond, ExprPtr then_arm, ExprPtr else_arm) {
  return std::make_shared<Expr>(Expr{
      span,
      IfExpr{std::move(cond), std::move(then_arm), std::move(else_arm)}});
}

// ----------------------------------------------------------------------------
// Structural equality
// ----------------------------------------------------------------------------

namespace {

bool expr_list_equal(const std::vector<ExprPtr>& a,
                     const std::vector<ExprPtr>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (!(*a[i] == *b[i])) return false;
  }
  return true;
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& lhs) {
        using T = std::decay_t<decltype(lhs)>;
        const T& rhs = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, LitExpr>) {
          return lhs.value == rhs.value;
        } else if constexpr (std::is_same_v<T, VarExpr>) {
          return lhs.name == rhs.name;
        } else if constexpr (std::is_same_v<T, CallExpr>) {
          return lhs.fname == rhs.fname && expr_list_equal(lhs.args, rhs.args);
        } else if constexpr (std::is_same_v<T, ChoiceExpr>) {
          return expr_list_equal(lhs.branches, rhs.branches);
        } else {
          return *lhs.cond == *rhs.cond && *lhs.then_arm == *rhs.then_arm &&
                 *lhs.else_arm == *rhs.else_arm;
        }
      },
      a.node);
}

bool Clause::has_var_params() const {
  for (const Param& p : params) {
    if (p.is_var()) return true;
  }
  return false;
}

bool operator==(const Clause& a, const Clause& b) {
  return a.fname == b.fname && a.params == b.params && *a.body == *b.body;
}

// ----------------------------------------------------------------------------
// Program
// ----------------------------------------------------------------------------

void Program::add_clause(Clause clause) {
  index_[{clause.fname, clause.params.size()}].push_back(clauses_.size());
  clauses_.push_back(std::move(clause));
}

const std::vector<size_t>& Program::clause_positions(Symbol fname,
                                                     size_t arity) const {
  static const std::vector<size_t> none;
  auto it = index_.find({fname, arity});
  return it == index_.end() ? none : it->second;
}

}  // namespace funcadd
