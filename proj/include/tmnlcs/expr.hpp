#ifndef TMNLCS_EXPR_HPP
#define TMNLCS_EXPR_HPP

#include <string_view>

#include "tmnlcs/nlfun.hpp"

namespace tmnlcs {

// Parses the little custom-function grammar over the variables na and nb:
//
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := '-' factor | primary
//   primary := INTEGER | 'na' | 'nb' | 'powneg1' '(' expr ')' | '(' expr ')'
//
// powneg1(x) is (-1)^x for integer-valued x.  Division by zero and powneg1
// of a non-integer raise FunctionDomainError at evaluation time; syntax
// errors raise ExprParseError at parse time.  The source text becomes the
// function's label.
NonlinearFunction parse_nonlinear_function(std::string_view source);

} // namespace tmnlcs

#endif
