#include "pcurves/poly/hompoly.hpp"

namespace pcurves {

GaussianHomPoly to_gaussian(const HomPoly& p) {
  return p.map_coeffs<GaussRat>([](const Rational& c) { return GaussRat(c); });
}

CBall gaussian_extension_eval(const HomPoly& p, const std::array<CBall, 3>& point) { return p.eval_ball(point); }

CBall gaussian_extension_eval(const HomPoly& p, const std::array<CBall, 3>& point, const BigFloat& max_radius) {
  CBall v = p.eval_ball(point);
  if (v.rad > max_radius)
    throw Error(ErrorCode::PrecisionExhausted, "enclosure radius " + v.rad.to_string(6) + " exceeds " + max_radius.to_string(6));
  return v;
}

HomPoly linear_form(const std::array<Rational, 3>& c) {
  HomPoly l;
  for (int v = 0; v < 3; ++v)
    if (c[v] != 0) l += HomPoly::variable(v) * c[v];
  return l;
}

std::array<Rational, 3> linear_coeffs(const HomPoly& l) {
  if (l.degree() != 1) throw Error(ErrorCode::WrongDegree, "expected a linear form");
  return {l.coeff({1, 0, 0}), l.coeff({0, 1, 0}), l.coeff({0, 0, 1})};
}

}  // namespace pcurves
