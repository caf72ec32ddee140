#include "funcadd/pretty.hpp"

#include <string>

namespace funcadd {

namespace {

// Binding strength used for minimal parenthesization. `if` extends greedily
// to the right, so it only prints bare at full-expression positions.
enum Prec : int {
  kPrecExpr = 0,    // if-expressions
  kPrecChoice = 1,  // ++
  kPrecCmp = 2,     // == != < <= > >=  (non-associative)
  kPrecAdd = 3,     // + -              (left)
  kPrecMul = 4,     // * / mod          (left)
  kPrecAtom = 6,
};

int infix_prec(const std::string& op) {
  if (op == "==" || op == "!=" || op == "<" || op == "<=" || op == ">" ||
      op == ">=") {
    return kPrecCmp;
  }
  if (op == "+" || op == "-") return kPrecAdd;
  if (op == "*" || op == "/" || op == "mod") return kPrecMul;
  return -1;
}

void print_expr(std::string& out, const Expr& e, int ctx);

void print_lit(std::string& out, const Literal& lit) {
  if (lit.is_int()) {
    out += std::to_string(lit.int_value());
  } else {
    out += lit.atom_name().str();
  }
}

// Re-sugars a ground-or-not cons chain ending in nil as a list literal;
// returns false when the chain is improper or open-ended.
bool try_print_list(std::string& out, const Expr& e) {
  std::vector<const Expr*> elems;
  const Expr* cur = &e;
  for (;;) {
    if (const auto* lit = std::get_if<LitExpr>(&cur->node)) {
      if (!lit->value.is_atom() || lit->value.atom_name() != atoms::nil()) {
        return false;
      }
      break;
    }
    const auto* call = std::get_if<CallExpr>(&cur->node);
    if (!call || call->fname.str() != "cons" || call->args.size() != 2) {
      return false;
    }
    elems.push_back(call->args[0].get());
    cur = call->args[1].get();
  }
  out += '[';
  for (size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ", ";
    print_expr(out, *elems[i], kPrecExpr);
  }
  out += ']';
  return true;
}

void print_call(std::string& out, const CallExpr& call, int ctx) {
  const std::string& name = call.fname.str();
  int prec = call.args.size() == 2 ? infix_prec(name) : -1;
  if (prec >= 0) {
    bool parens = prec < ctx;
    if (parens) out += '(';
    // Left-associative chains print bare on the left; comparisons are
    // non-associative, so both sides demand tighter operands.
    int left_ctx = prec == kPrecCmp ? prec + 1 : prec;
    print_expr(out, *call.args[0], left_ctx);
    out += ' ';
    out += name;
    out += ' ';
    print_expr(out, *call.args[1], prec + 1);
    if (parens) out += ')';
    return;
  }
  if (name == "fail" && call.args.empty()) {
    out += "fail";
    return;
  }
  out += name;
  out += '(';
  for (size_t i = 0; i < call.args.size(); ++i) {
    if (i) out += ", ";
    print_expr(out, *call.args[i], kPrecExpr);
  }
  out += ')';
}

void print_expr(std::string& out, const Expr& e, int ctx) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, LitExpr>) {
          print_lit(out, node.value);
        } else if constexpr (std::is_same_v<T, VarExpr>) {
          out += node.name.str();
        } else if constexpr (std::is_same_v<T, CallExpr>) {
          if (node.fname.str() == "cons" && node.args.size() == 2 &&
              try_print_list(out, e)) {
            return;
          }
          print_call(out, node, ctx);
        } else if constexpr (std::is_same_v<T, ChoiceExpr>) {
          bool parens = kPrecChoice < ctx;
          if (parens) out += '(';
          for (size_t i = 0; i < node.branches.size(); ++i) {
            if (i) out += " ++ ";
            print_expr(out, *node.branches[i], kPrecCmp);
          }
          if (parens) out += ')';
        } else {
          bool parens = kPrecExpr < ctx;
          if (parens) out += '(';
          out += "if ";
          print_expr(out, *node.cond, kPrecExpr);
          out += " then ";
          print_expr(out, *node.then_arm, kPrecExpr);
          out += " else ";
          print_expr(out, *node.else_arm, kPrecExpr);
          if (parens) out += ')';
        }
      },
      e.node);
}

}  // namespace

std::string pretty(const Literal& lit) {
  std::string out;
  print_lit(out, lit);
  return out;
}

std::string pretty(const Value& v) {
  if (v.is_int()) return std::to_string(v.int_value());
  if (v.is_atom()) return v.atom_name().str();
  // Proper lists print as literals, improper chains in constructor form.
  const Value* cur = &v;
  std::vector<const Value*> elems;
  while (cur->is_cons()) {
    elems.push_back(&cur->head());
    cur = &cur->tail();
  }
  std::string out;
  if (cur->is_nil()) {
    out += '[';
    for (size_t i = 0; i < elems.size(); ++i) {
      if (i) out += ", ";
      out += pretty(*elems[i]);
    }
    out += ']';
  } else {
    out = pretty(*cur);
    for (auto it = elems.rbegin(); it != elems.rend(); ++it) {
      out = "cons(" + pretty(**it) + ", " + out + ")";
    }
  }
  return out;
}

std::string pretty(const Expr& expr) {
  std::string out;
  print_expr(out, expr, kPrecExpr);
  return out;
}

std::string pretty(const ExprPtr& expr) { return pretty(*expr); }

std::string pretty(const Param& param) {
  if (param.is_var()) return param.var_name().str();
  return pretty(param.literal());
}

std::string pretty_head(const Clause& clause) {
  std::string out = clause.fname.str();
  out += '(';
  for (size_t i = 0; i < clause.params.size(); ++i) {
    if (i) out += ", ";
    out += pretty(clause.params[i]);
  }
  out += ')';
  return out;
}

std::string pretty(const Clause& clause) {
  return pretty_head(clause) + " = " + pretty(*clause.body);
}

std::string pretty(const Program& program) {
  std::string out;
  for (const Clause& c : program.clauses()) {
    out += pretty(c);
    out += ";\n";
  }
  return out;
}

}  // namespace funcadd
