#pragma once

#include "plcurve/algebra/hom_poly.hpp"

namespace plc {

// gcd of two homogeneous polynomials with leading coefficient 1. The power of
// z is split off, the rest is computed in the affine chart z = 1 and then
// homogenized again. gcd(0, 0) is the zero polynomial of degree 0.
HomPoly gcd(const HomPoly& a, const HomPoly& b);

// True iff gcd(f, f_x, f_y, f_z) is a nonzero constant, i.e. f has no repeated
// factor. Throws InvalidArgument for the zero polynomial.
bool squarefree_check(const HomPoly& f);

// The exact gcd route alone, without the line-restriction shortcut.
bool squarefree_check_exact(const HomPoly& f);

}  // namespace plc
