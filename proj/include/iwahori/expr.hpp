#pragma once

// Mixed Hecke/polynomial expressions for the `eval` subcommand.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' INT)?
//   atom   := INT | s | v | x<i> | e[l1,..,lm] | T[i] | Tw[k] | T(<weyl>) | Tinv(<weyl>) | '(' expr ')'
//
// Products are left to right. Hecke times polynomial is the module action;
// a polynomial in s alone times a Hecke element is a scalar multiple.

#include <string>
#include <string_view>
#include <variant>

#include "iwahori/hecke.hpp"
#include "iwahori/laurent.hpp"

namespace iwahori {

using ExprValue = std::variant<LaurentPoly, HeckeElt>;

/// Throws ParseError on malformed input or ill-typed operations.
ExprValue evaluate(std::string_view text, int m);

std::string to_string(const ExprValue& v);

}  // namespace iwahori
