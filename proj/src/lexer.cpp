#include <cctype>
#include <cstdint>
#include <string>

#include "funcadd/errors.hpp"
#include "funcadd/parser.hpp"
#include "funcadd/token.hpp"

namespace funcadd {

const char* token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Ident: return "identifier";
    case TokenKind::Int: return "integer";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::Comma: return "','";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::Equals: return "'='";
    case TokenKind::ChoiceOp: return "'++'";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::EqEq: return "'=='";
    case TokenKind::NotEq: return "'!='";
    case TokenKind::Lt: return "'<'";
    case TokenKind::Le: return "'<='";
    case TokenKind::Gt: return "'>'";
    case TokenKind::Ge: return "'>='";
    case TokenKind::KwIf: return "'if'";
    case TokenKind::KwThen: return "'then'";
    case TokenKind::KwElse: return "'else'";
    case TokenKind::KwFail: return "'fail'";
    case TokenKind::End: return "end of input";
  }
  return "?";
}

namespace {

// One past INT64_MAX; permitted only directly under a minus sign.
constexpr std::uint64_t kInt64MinMagnitude = 1ull << 63;

struct Lexer {
  std::string_view src;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  bool done() const { return pos >= src.size(); }
  char peek() const { return src[pos]; }

  char advance() {
    char c = src[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  bool match(char expected) {
    if (done() || src[pos] != expected) return false;
    advance();
    return true;
  }

  [[noreturn]] void fail(Span at, const std::string& message) const {
    throw LexError(std::to_string(at.line) + ":" + std::to_string(at.col) +
                       ": " + message,
                   at);
  }

  Token lex_number(Span at) {
    std::string digits;
    std::uint64_t magnitude = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      char c = advance();
      digits.push_back(c);
      magnitude = magnitude * 10 + static_cast<std::uint64_t>(c - '0');
      if (magnitude > kInt64MinMagnitude) {
        // Consume the rest of the literal for a clean message.
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
          digits.push_back(advance());
        }
        fail(at, "integer literal '" + digits + "' out of 64-bit range");
      }
    }
    return Token{TokenKind::Int, std::move(digits), magnitude, at};
  }

  Token lex_ident(Span at) {
    std::string name;
    name.push_back(advance());
    while (!done()) {
      char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        name.push_back(advance());
      } else {
        break;
      }
    }
    TokenKind kind = TokenKind::Ident;
    if (name == "if") kind = TokenKind::KwIf;
    else if (name == "then") kind = TokenKind::KwThen;
    else if (name == "else") kind = TokenKind::KwElse;
    else if (name == "fail") kind = TokenKind::KwFail;
    return Token{kind, std::move(name), 0, at};
  }
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
  Lexer lx{source};
  std::vector<Token> tokens;

  while (!lx.done()) {
    Span at{lx.line, lx.col};
    char c = lx.peek();

    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      lx.advance();
      continue;
    }
    if (c == '#') {
      while (!lx.done() && lx.peek() != '\n') lx.advance();
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      tokens.push_back(lx.lex_number(at));
      continue;
    }
    if (c >= 'a' && c <= 'z') {
      tokens.push_back(lx.lex_ident(at));
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      lx.fail(at, std::string("identifiers must start with a lowercase "
                              "letter; found '") +
                      c + "'");
    }

    size_t start = lx.pos;
    lx.advance();
    TokenKind kind;
    switch (c) {
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case '[': kind = TokenKind::LBracket; break;
      case ']': kind = TokenKind::RBracket; break;
      case ',': kind = TokenKind::Comma; break;
      case ';': kind = TokenKind::Semicolon; break;
      case '+': kind = lx.match('+') ? TokenKind::ChoiceOp : TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '/': kind = TokenKind::Slash; break;
      case '=': kind = lx.match('=') ? TokenKind::EqEq : TokenKind::Equals; break;
      case '<': kind = lx.match('=') ? TokenKind::Le : TokenKind::Lt; break;
      case '>': kind = lx.match('=') ? TokenKind::Ge : TokenKind::Gt; break;
      case '!':
        if (!lx.match('=')) lx.fail(at, "expected '=' after '!'");
        kind = TokenKind::NotEq;
        break;
      default:
        lx.fail(at, std::string("unexpected character '") + c + "'");
    }
    tokens.push_back(
        Token{kind, std::string(source.substr(start, lx.pos - start)), 0, at});
  }

  tokens.push_back(Token{TokenKind::End, "", 0, Span{lx.line, lx.col}});
  return tokens;
}

}  // namespace funcadd
