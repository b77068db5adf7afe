#pragma once

#include <string>
#include <variant>
#include <vector>

#include "algind/ratfun.hpp"

namespace algind {

using ParsedExpr = std::variant<Polynomial, RationalFunction>;

/// Parses the expression grammar
///
///   expr   := term (('+'|'-') term)*
///   term   := signed (('*'|'/') signed)*
///   signed := '-'? factor
///   factor := base ('^' nat)?
///   base   := rational | variable | '(' expr ')'
///
/// over the declared variables. Whitespace is insignificant; juxtaposition
/// is not multiplication; '^' binds tighter than unary minus. Division by a
/// constant keeps the result a polynomial; division by a non-constant
/// yields a RationalFunction. Every failure is a ParseError carrying a
/// 1-based line and column.
ParsedExpr parse_expression(const std::string& text, const std::vector<std::string>& variables);

std::string format_canonical(const Polynomial& p);
std::string format_canonical(const RationalFunction& r);
std::string format_canonical(const ParsedExpr& e);

} // namespace algind
