#pragma once

#include <string>

#include "lefkit/polynomial.hpp"
#include "lefkit/variables.hpp"

namespace lefkit {

/// Parses a polynomial expression.  Grammar:
///   expr   := term (('+'|'-') term)*          (unary '-' allowed at head)
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := rational | ident | '(' expr ')'
///   rational := int ('/' nat)?
/// Whitespace is insignificant.  Throws SyntaxError / UnknownVariable.
Polynomial parse_polynomial(const std::string& text, const VariableSet& vars);

/// Canonical printing: terms in decreasing grevlex order, explicit '*' and
/// '^', coefficients as integers or "a/b".  parse(print(f)) == f.
std::string print_polynomial(const Polynomial& f, const VariableSet& vars);

std::string print_monomial(const Monomial& m, const VariableSet& vars);

}  // namespace lefkit
