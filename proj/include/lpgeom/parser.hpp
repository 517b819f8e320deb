#pragma once

#include "lpgeom/chart.hpp"
#include "lpgeom/expression.hpp"
#include "lpgeom/form.hpp"

#include <string_view>

namespace lpg {

/// Parses the expression grammar:
///
///   expr    := sum ('/\' sum)*
///   sum     := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | primary
///   primary := integer | identifier | 'd' '(' expr ')' | '(' expr ')'
///
/// `p/q` literals are divisions of integers. `*` needs at least one 0-form
/// operand and `/` a nonzero 0-form divisor. Syntax errors throw ParseError
/// with a byte offset; unknown identifiers throw UnknownSymbol and zero
/// divisors DivisionByZero, both naming the offset in the message.
DifferentialForm parse_form(std::string_view source, const ChartPtr& chart);

/// As parse_form, but the result must be a 0-form.
Expression parse_expression(std::string_view source, const ChartPtr& chart);

} // namespace lpg
