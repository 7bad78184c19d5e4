#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pcurves/arrangement/projective.hpp"

namespace pcurves {

struct IntersectionRecord {
  ProjVec point;
  int multiplicity = 1;
  /// Multiplicity >= 2 at a point where both curves are smooth.
  bool tangential = false;
  std::pair<int, int> pair{0, 1};
};

/// All common zeros of p and q with intersection multiplicities (summing to
/// deg p * deg q), sorted by proj_less. Points are exact over Q(i) when the
/// coordinates are recognized. Throws CommonComponent, ZeroPolynomial,
/// PrecisionExhausted.
std::vector<IntersectionRecord> intersection_points(const HomPoly& p, const HomPoly& q);

/// Common projective zeros of a system (no multiplicities). Members are
/// raised to a common degree and two seeded random combinations are
/// intersected. Throws InfinitelyManySolutions when a common curve persists.
std::vector<ProjVec> common_zeros(const std::vector<HomPoly>& system, std::uint64_t seed = 0x5eed);

/// Gradient of p at a point.
BallVec gradient_at(const HomPoly& p, const ProjVec& pt);
/// Smoothness of V(p) at a point of it (gradient not numerically zero).
Zero3 singular_at(const HomPoly& p, const ProjVec& pt);

/// Tangent line grad p(pt) . z. Throws NotOnCurve, SingularPoint.
ProjVec tangent_line(const HomPoly& p, const ProjVec& pt);
/// The tangent as a rational linear form; requires a rational point.
HomPoly tangent_form(const HomPoly& p, const ProjVec& pt);

/// Coefficients c_0..c_d of p(P + s X) in s.
std::vector<CBall> restriction_coeffs(const HomPoly& p, const ProjVec& P, const ProjVec& X);
std::vector<GaussRat> restriction_coeffs_exact(const HomPoly& p, const GaussVec& P, const GaussVec& X);

/// Whether the line PX meets V(p) in P alone: c_0..c_{d-1} vanish and c_d does
/// not.
Tri meets_only_at(const HomPoly& p, const ProjVec& P, const ProjVec& X);

}  // namespace pcurves
