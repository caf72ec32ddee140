#pragma once

#include <cstdint>
#include <string>

namespace funcadd {

// 1-based source position; {0, 0} marks synthesized nodes.
struct Span {
  int line = 0;
  int col = 0;

  bool known() const { return line > 0; }
  friend bool operator==(const Span&, const Span&) = default;
};

enum class TokenKind {
  Ident,
  Int,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Semicolon,
  Equals,    // =   (clause definition only)
  ChoiceOp,  // ++
  Plus,
  Minus,
  Star,
  Slash,
  EqEq,
  NotEq,
  Lt,
  Le,
  Gt,
  Ge,
  KwIf,
  KwThen,
  KwElse,
  KwFail,
  End,
};

const char* token_kind_name(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  // Int tokens carry an unsigned magnitude; the parser applies the sign so
  // that -9223372036854775808 stays representable.
  std::uint64_t magnitude = 0;
  Span span;
};

}  // namespace funcadd
