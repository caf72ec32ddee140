#pragma once

#include <stdexcept>
#include <string>

#include "funcadd/token.hpp"

namespace funcadd {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, Span at)
      : std::runtime_error(what), at_(at) {}

  Span at() const { return at_; }

 private:
  Span at_;
};

class LexError : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

class ParseError : public SyntaxError {
 public:
  enum class Kind {
    UnexpectedToken,
    DuplicateParam,
    ReservedName,
    IntegerRange,
  };

  ParseError(Kind kind, const std::string& what, Span at)
      : SyntaxError(what, at), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace funcadd
