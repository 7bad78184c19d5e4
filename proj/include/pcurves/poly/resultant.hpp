#pragma once

#include <vector>

#include "pcurves/poly/hompoly.hpp"
#include "pcurves/poly/unipoly.hpp"

namespace pcurves {

/// Polynomial in x with coefficients in Q[t], index = power of x.
using BiPoly = std::vector<UniPoly>;

/// Fraction-free (Bareiss) determinant over Q[t].
UniPoly determinant(std::vector<std::vector<UniPoly>> m);

/// Views p as a polynomial in z_v of formal degree deg(p), with z_a = t and
/// z_b = 1 where (a, b) are the remaining indices in increasing order.
BiPoly dehomogenize(const HomPoly& p, int v);

/// Sylvester resultant of two polynomials in x with formal degrees
/// size()-1.
UniPoly sylvester_resultant(const BiPoly& p, const BiPoly& q);

/// Subresultant S_j as a polynomial in x (coefficients of x^0..x^j), for
/// 0 <= j < min(m, n). S_0 is the resultant.
BiPoly subresultant(const BiPoly& p, const BiPoly& q, int j);

/// Sylvester resultant eliminating z_v; homogeneous of degree deg(p)*deg(q) in
/// the remaining two variables (or zero).
HomPoly resultant(const HomPoly& p, const HomPoly& q, int eliminated_variable);

}  // namespace pcurves
