#pragma once

#include <string>
#include <string_view>

#include "aimp/ast.hpp"

namespace aimp {

// Concrete syntax:
//
//   program := cmd
//   cmd     := atom [ ";" cmd ]               right-associated seq
//   atom    := IDENT ":=" expr | "skip" | "print" expr | "(" cmd ")"
//   expr    := term { ("+" | "-") term }      left-associative
//   term    := NUMBER | "-" NUMBER | "true" | "false" | IDENT | "(" expr ")"
//
// `#` starts a comment that runs to the end of the line.

/// Throws ParseError with a 1-based line and column.
Program parse_program(std::string_view text);

/// Canonical text: right spines of seq are flattened. Parentheses appear only
/// around a seq in first position and around right operands of plus/minus.
std::string print_program(const Program& p);

std::string print_cmd(const Cmd& c);
std::string print_expr(const Expr& e);

/// Shortest decimal form that reads back to the same double.
std::string format_number(double v);

}  // namespace aimp
