#ifndef LSPECIAL_GCD_HPP
#define LSPECIAL_GCD_HPP

#include "lspecial/bivar.hpp"

namespace lspecial {

// Canonical form of a nonzero real-rational polynomial: integer coprime
// coefficients with positive grlex-leading coefficient.
BivarPoly make_primitive_real(const BivarPoly& p);

// Gcd of two real-rational bivariate polynomials (Exact backend), returned
// in canonical primitive form. gcd(p, 0) = primitive part of p.
// Implemented as content/primitive-part recursion in (Q[x])[y] with a
// pseudo-remainder sequence.
BivarPoly bp_gcd_real(const BivarPoly& a, const BivarPoly& b);

}  // namespace lspecial

#endif  // LSPECIAL_GCD_HPP
