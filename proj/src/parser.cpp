#include "funcadd/parser.hpp"

#include <limits>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "funcadd/builtins.hpp"

namespace funcadd {

namespace {

constexpr std::uint64_t kInt64MinMagnitude = 1ull << 63;

std::string position(Span at) {
  return std::to_string(at.line) + ":" + std::to_string(at.col);
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

  Program program() {
    Program prog;
    while (!at(TokenKind::End)) {
      prog.add_clause(resolve_names(clause()));
      if (match(TokenKind::Semicolon)) continue;
      expect(TokenKind::End, "';' between clauses");
      break;
    }
    return prog;
  }

  ExprPtr single_expr() {
    ExprPtr e = expr();
    expect(TokenKind::End, "end of expression");
    return e;
  }

 private:
  // --------------------------------------------------------------------
  // Token cursor
  // --------------------------------------------------------------------

  const Token& peek() const { return tokens_[pos_]; }
  bool at(TokenKind kind) const { return peek().kind == kind; }

  const Token& advance() { return tokens_[pos_++]; }

  bool match(TokenKind kind) {
    if (!at(kind)) return false;
    ++pos_;
    return true;
  }

  const Token& expect(TokenKind kind, const std::string& what) {
    if (!at(kind)) fail("expected " + what);
    return advance();
  }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    std::string found = token_kind_name(t.kind);
    if (t.kind == TokenKind::Ident || t.kind == TokenKind::Int) {
      found += " '" + t.text + "'";
    }
    fail(ParseError::Kind::UnexpectedToken, message + ", found " + found,
         t.span);
  }

  [[noreturn]] void fail(ParseError::Kind kind, const std::string& message,
                         Span at) const {
    throw ParseError(kind, position(at) + ": " + message, at);
  }

  // --------------------------------------------------------------------
  // Clauses
  // --------------------------------------------------------------------

  Clause clause() {
    const Token& name = expect(TokenKind::Ident, "clause head");
    Symbol fname = Symbol::intern(name.text);
    if (is_builtin_name(fname)) {
      fail(ParseError::Kind::ReservedName,
           "'" + name.text + "' is a builtin and cannot be redefined",
           name.span);
    }
    expect(TokenKind::LParen, "'(' after clause name");
    std::vector<Param> params;
    std::set<Symbol> seen;
    if (!at(TokenKind::RParen)) {
      do {
        Param p = param();
        if (p.is_var() && !seen.insert(p.var_name()).second) {
          fail(ParseError::Kind::DuplicateParam,
               "duplicate parameter '" + p.var_name().str() + "' in head of '" +
                   name.text + "'",
               name.span);
        }
        params.push_back(std::move(p));
      } while (match(TokenKind::Comma));
    }
    expect(TokenKind::RParen, "')' after parameters");
    expect(TokenKind::Equals, "'=' after clause head");
    ExprPtr body = expr();
    return Clause{fname, std::move(params), std::move(body), name.span};
  }

  Param param() {
    if (at(TokenKind::Ident)) {
      const Token& t = advance();
      Symbol s = Symbol::intern(t.text);
      // The conventional atoms match as constants; anything else binds.
      if (s == atoms::nil() || s == atoms::true_() || s == atoms::false_()) {
        return Param::constant(Literal::atom(s));
      }
      return Param::var(s);
    }
    if (at(TokenKind::Int)) {
      const Token& t = advance();
      return Param::constant(Literal::integer(int_from_magnitude(t, false)));
    }
    if (match(TokenKind::Minus)) {
      const Token& t = expect(TokenKind::Int, "integer after '-' in parameter");
      return Param::constant(Literal::integer(int_from_magnitude(t, true)));
    }
    fail("expected parameter");
  }

  std::int64_t int_from_magnitude(const Token& t, bool negative) const {
    if (negative) {
      if (t.magnitude == kInt64MinMagnitude) {
        return std::numeric_limits<std::int64_t>::min();
      }
      return -static_cast<std::int64_t>(t.magnitude);
    }
    if (t.magnitude >= kInt64MinMagnitude) {
      fail(ParseError::Kind::IntegerRange,
           "integer literal '" + t.text + "' out of 64-bit range", t.span);
    }
    return static_cast<std::int64_t>(t.magnitude);
  }

  // --------------------------------------------------------------------
  // Expressions, loosest to tightest:
  //   choice < comparison (non-assoc) < additive < multiplicative < unary
  // --------------------------------------------------------------------

  ExprPtr expr() { return choice(); }

  ExprPtr choice() {
    ExprPtr first = cmp();
    if (!at(TokenKind::ChoiceOp)) return first;
    Span at_span = first->span;
    std::vector<ExprPtr> branches;
    branches.push_back(std::move(first));
    while (match(TokenKind::ChoiceOp)) branches.push_back(cmp());
    return make_choice(at_span, std::move(branches));
  }

  ExprPtr cmp() {
    ExprPtr lhs = add();
    const char* op = cmp_op();
    if (!op) return lhs;
    advance();
    ExprPtr rhs = add();
    Span at_span = lhs->span;
    return make_call(at_span, Symbol::intern(op), {std::move(lhs), std::move(rhs)});
  }

  const char* cmp_op() const {
    switch (peek().kind) {
      case TokenKind::EqEq: return "==";
      case TokenKind::NotEq: return "!=";
      case TokenKind::Lt: return "<";
      case TokenKind::Le: return "<=";
      case TokenKind::Gt: return ">";
      case TokenKind::Ge: return ">=";
      default: return nullptr;
    }
  }

  ExprPtr add() {
    ExprPtr lhs = mul();
    for (;;) {
      const char* op = at(TokenKind::Plus)    ? "+"
                       : at(TokenKind::Minus) ? "-"
                                              : nullptr;
      if (!op) return lhs;
      advance();
      ExprPtr rhs = mul();
      Span at_span = lhs->span;
      lhs = make_call(at_span, Symbol::intern(op),
                      {std::move(lhs), std::move(rhs)});
    }
  }

  ExprPtr mul() {
    ExprPtr lhs = unary();
    for (;;) {
      const char* op = nullptr;
      if (at(TokenKind::Star)) op = "*";
      else if (at(TokenKind::Slash)) op = "/";
      // After a complete operand, `mod` can only be the operator.
      else if (at(TokenKind::Ident) && peek().text == "mod") op = "mod";
      if (!op) return lhs;
      advance();
      ExprPtr rhs = unary();
      Span at_span = lhs->span;
      lhs = make_call(at_span, Symbol::intern(op),
                      {std::move(lhs), std::move(rhs)});
    }
  }

  ExprPtr unary() {
    if (at(TokenKind::Minus)) {
      Span at_span = advance().span;
      if (at(TokenKind::Int)) {
        const Token& t = advance();
        return make_int(at_span, int_from_magnitude(t, true));
      }
      ExprPtr operand = primary();
      return make_call(at_span, Symbol::intern("-"),
                       {make_int(at_span, 0), std::move(operand)});
    }
    return primary();
  }

  ExprPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Int: {
        advance();
        return make_int(t.span, int_from_magnitude(t, false));
      }
      case TokenKind::KwFail:
        advance();
        return make_call(t.span, Symbol::intern("fail"), {});
      case TokenKind::Ident: {
        advance();
        Symbol name = Symbol::intern(t.text);
        if (!match(TokenKind::LParen)) return make_var(t.span, name);
        std::vector<ExprPtr> args;
        if (!at(TokenKind::RParen)) {
          do {
            args.push_back(expr());
          } while (match(TokenKind::Comma));
        }
        expect(TokenKind::RParen, "')' after arguments");
        return make_call(t.span, name, std::move(args));
      }
      case TokenKind::LBracket: {
        advance();
        std::vector<ExprPtr> elems;
        if (!at(TokenKind::RBracket)) {
          do {
            elems.push_back(expr());
          } while (match(TokenKind::Comma));
        }
        expect(TokenKind::RBracket, "']' after list elements");
        // List sugar: [a, b] is cons(a, cons(b, nil)).
        ExprPtr list = make_atom(t.span, atoms::nil());
        for (auto it = elems.rbegin(); it != elems.rend(); ++it) {
          list = make_call(t.span, Symbol::intern("cons"),
                           {std::move(*it), std::move(list)});
        }
        return list;
      }
      case TokenKind::KwIf: {
        advance();
        ExprPtr cond = expr();
        expect(TokenKind::KwThen, "'then'");
        ExprPtr then_arm = expr();
        expect(TokenKind::KwElse, "'else'");
        ExprPtr else_arm = expr();
        return make_if(t.span, std::move(cond), std::move(then_arm),
                       std::move(else_arm));
      }
      case TokenKind::LParen: {
        advance();
        ExprPtr inner = expr();
        expect(TokenKind::RParen, "')'");
        return inner;
      }
      default:
        fail("expected expression");
    }
  }

  const std::vector<Token>& tokens_;
  size_t pos_ = 0;
};

}  // namespace

Program parse_program(const std::vector<Token>& tokens) {
  return Parser(tokens).program();
}

Program parse_program_text(std::string_view source) {
  return parse_program(tokenize(source));
}

ExprPtr parse_expr(const std::vector<Token>& tokens) {
  return Parser(tokens).single_expr();
}

ExprPtr parse_expr_text(std::string_view source) {
  return parse_expr(tokenize(source));
}

ExprPtr resolve_expr(const ExprPtr& expr, const std::set<Symbol>& params) {
  const Expr& e = *expr;
  return std::visit(
      [&](const auto& node) -> ExprPtr {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, LitExpr>) {
          return expr;
        } else if constexpr (std::is_same_v<T, VarExpr>) {
          if (params.count(node.name)) return expr;
          return make_atom(e.span, node.name);
        } else if constexpr (std::is_same_v<T, CallExpr>) {
          std::vector<ExprPtr> args;
          args.reserve(node.args.size());
          bool changed = false;
          for (const ExprPtr& a : node.args) {
            args.push_back(resolve_expr(a, params));
            changed |= args.back() != a;
          }
          if (!changed) return expr;
          return make_call(e.span, node.fname, std::move(args));
        } else if constexpr (std::is_same_v<T, ChoiceExpr>) {
          std::vector<ExprPtr> branches;
          branches.reserve(node.branches.size());
          bool changed = false;
          for (const ExprPtr& b : node.branches) {
            branches.push_back(resolve_expr(b, params));
            changed |= branches.back() != b;
          }
          if (!changed) return expr;
          return make_choice(e.span, std::move(branches));
        } else {
          ExprPtr cond = resolve_expr(node.cond, params);
          ExprPtr then_arm = resolve_expr(node.then_arm, params);
          ExprPtr else_arm = resolve_expr(node.else_arm, params);
          if (cond == node.cond && then_arm == node.then_arm &&
              else_arm == node.else_arm) {
            return expr;
          }
          return make_if(e.span, std::move(cond), std::move(then_arm),
                         std::move(else_arm));
        }
      },
      e.node);
}

Clause resolve_names(Clause clause) {
  std::set<Symbol> params;
  for (const Param& p : clause.params) {
    if (p.is_var()) params.insert(p.var_name());
  }
  clause.body = resolve_expr(clause.body, params);
  return clause;
}

ExprPtr parse_entry_text(std::string_view source) {
  return resolve_expr(parse_expr_text(source), {});
}

}  // namespace funcadd
