#pragma once

#include <stdexcept>

#include "ehv/pbw.hpp"

namespace ehv::cli {

// Raised on malformed input expressions; mapped to exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses the expression grammar documented in the README:
//
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := atom ('^' natural)?
//   atom    := rational | parameter | generator | '(' expr ')' | '-' atom
//   rational:= integer ('/' natural)?
//   parameter over {alpha, beta, F, ell1, ell2, ell3, lambda, mu, nu}
//   generator := ('L'|'J'|'G') '(' integer ')' | 'C1' | 'C2' | 'C3'
//
// The result is an element of U(L) kept un-normalized: words record the
// product order as written.
UEElement parse_expression(const std::string& text);

// Requires every term to be a plain scalar (no generators).
Scalar parse_scalar(const std::string& text);

// Requires every term to be a scalar multiple of a single generator.
LieElement parse_lie_element(const UEElement& e, const std::string& text);
LieElement parse_lie_element(const std::string& text);

// "alpha=0,beta=-1/2,F=1"; values may be any scalar expression.
Substitution parse_bindings(const std::string& text);

}  // namespace ehv::cli
