#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ohno/combination.hpp"
#include "ohno/error.hpp"

namespace ohno::expr {

/// Syntax error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct Position {
  int line = 1;
  int column = 1;
};

struct Node {
  enum class Kind { Literal, Rep, Dual, Hast, Ohno, Sha, Sum, Scale, Zero };

  Kind kind;
  Position pos;
  /// Literal entries; Rep uses {a, l}; Hast and Ohno use {k} / {m}.
  std::vector<int> ints;
  /// Sum: one sign per child (+1 / -1).
  std::vector<int> signs;
  /// Scale factor.
  Coefficient scale;
  std::vector<std::unique_ptr<Node>> children;
};

using Expression = std::unique_ptr<Node>;

/// Parses
///   expr    := ["+"|"-"] term (("+"|"-") term)* | "0"
///   term    := [rational "*"] factor ("#" factor)*
///   factor  := literal | "rep(" int "," int ")" | "dual(" expr ")"
///            | "hast(" int "," expr ")" | "ohno(" int "," expr ")" | "(" expr ")"
///   literal := "(" int ("," int)* ")" | "()"
///   rational:= int ["/" int]
/// A parenthesis opens a literal when an integer directly followed by
/// "," or ")" comes next, or when it is "()"; otherwise it groups.
Expression parse(std::string_view text);

/// Exact combination denoted by the expression. Errors from the index
/// algebra are rethrown as DomainError prefixed with the position of the
/// node that raised them.
IndexCombination expand(const Node& node);
IndexCombination expand(std::string_view text);

/// One-line reference for usage messages.
std::string_view grammar_help();

}  // namespace ohno::expr
