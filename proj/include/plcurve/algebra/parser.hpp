#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "plcurve/algebra/hom_poly.hpp"

namespace plc {

// Syntax tree for the polynomial input language:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := 'x' | 'y' | 'z' | int | int '/' int | '(' expr ')' | '-' factor
//
// Whitespace is insignificant; implicit multiplication is rejected.
struct PolyExpr {
  enum class Kind { constant, variable, sum, difference, product, power, negation };

  Kind kind = Kind::constant;
  Rational value;            // constant
  Var var = Var::x;          // variable
  unsigned exponent = 0;     // power
  std::vector<PolyExpr> children;
  std::size_t position = 0;  // offset of the node in the source text
};

PolyExpr parse_expr(std::string_view text);

// Parses and expands; throws SyntaxError, NotHomogeneous or ZeroPolynomial.
HomPoly parse_poly(std::string_view text);

}  // namespace plc
