#pragma once

#include <string>

#include "qtoric/algebra/alexpoly.hpp"
#include "qtoric/multipoly/tripoly.hpp"

namespace qtoric {

// Expression grammar:
//   expr    := term (('+' | '-') term)*
//   term    := ('-' | '+')? power ('*' power)*
//   power   := atom ('^' INT)?
//   atom    := INT ('/' INT)? | variable | 'w{' INT '}' | 'w' INT | 'rad' | '(' expr ')'
// Variables default to x, y, z; `vars` renames them (e.g. "t" for a univariate input).
// A null field means Q; w{n} requires n | field n, rad requires a radical layer.
TriPoly parse_expression(const std::string& text, const FieldPtr& field,
                         const std::string& vars = "xyz");

FieldElem parse_constant(const std::string& text, const FieldPtr& field);

// Univariate polynomial in t with rational coefficients, e.g. "(t^2-t+1)^3".
UPoly parse_upoly(const std::string& text);
AlexPoly parse_alexander(const std::string& text);

}  // namespace qtoric
