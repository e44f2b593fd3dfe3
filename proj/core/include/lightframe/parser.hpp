#ifndef LIGHTFRAME_PARSER_HPP
#define LIGHTFRAME_PARSER_HPP

#include <string>
#include <vector>

#include "lightframe/rational_expr.hpp"

namespace lightframe {

// Parses an arithmetic expression over the named variables.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := base ('^' nonneg-integer)?
//   base   := rational-literal | identifier | '(' expr ')' | '-' base
//   rational-literal := integer ('/' integer)?
//   identifier       := letters digits?
//
// Whitespace is insignificant. Unknown identifiers, malformed syntax and
// division by an expression that is identically zero raise ParseError with a
// 1-based character position.
RationalExpr parse_expression(const std::string& text,
                              const std::vector<std::string>& variables);

}  // namespace lightframe

#endif
