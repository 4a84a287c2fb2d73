#pragma once

#include <stdexcept>
#include <string>

#include "crsym/expr.hpp"

namespace crsym {

/// Syntax or semantic error in expression text; `position` is a 0-based
/// character offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(size_t position, const std::string& message)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

/// Parses the ASCII expression grammar
///
///   expr   := ["+"|"-"] term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := base ("^" nat)?
///   base   := rational | "i" | var | "(" expr ")" | fn "(" expr ")"
///   fn     := "log" | "abs2" | "Im" | "Re" | "conj"
///   var    := "z" nat | "u"
///
/// Im/Re/abs2/conj are eliminated through the bar involution. Each distinct
/// log argument is registered in `vars` (or reused).
Expr parse_expr(const std::string& text, VarTable& vars);

}  // namespace crsym
