#pragma once

#include "qtoric/multipoly/tripoly.hpp"

namespace qtoric {

// Greatest common divisor of two polynomials in x, y (no z), or of two homogeneous
// polynomials in x, y, z. Result has lexicographic leading coefficient 1; gcd(0, 0) = 0.
TriPoly poly_gcd(const TriPoly& f, const TriPoly& g);

// Monic gcd of univariate polynomials over a number field (modular algorithm).
KPoly kpoly_gcd(const KPoly& a, const KPoly& b);

// Univariate content in y of a polynomial in x, y (as a polynomial in y alone).
TriPoly content_in_x(const TriPoly& f);

}  // namespace qtoric
