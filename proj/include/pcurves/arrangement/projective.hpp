#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pcurves/poly/hompoly.hpp"
#include "pcurves/poly/quadric.hpp"

namespace pcurves {

using GaussVec = std::array<GaussRat, 3>;
using BallVec = std::array<CBall, 3>;

/// Point or line of P2. `ball` is the unit sup-norm representative whose first
/// nonzero coordinate is positive real. `exact`, when present, holds Q(i)
/// coordinates scaled so the first nonzero one is 1 (points) or, for real
/// lines, a primitive integer vector with positive first entry.
struct ProjVec {
  BallVec ball;
  std::optional<GaussVec> exact;

  bool is_rational() const;
  /// Requires is_rational().
  Vec3 rational() const;
  /// Decimal "a+bi" strings of the ball midpoints.
  std::array<std::string, 3> coord_strings(int digits = 20) const;
  /// Largest coordinate radius, as a decimal string.
  std::string radius_string() const;
  std::string to_string(int digits = 12) const;
};

/// Three-valued zero test on a ball: nonzero when 0 is excluded, zero when 0
/// is included and the radius is below 2^(-prec/2) * scale, unknown otherwise.
enum class Zero3 { zero, nonzero, unknown };
Zero3 decide_zero(const CBall& b, const BigFloat& scale = BigFloat(1));

/// Three-valued predicate outcome.
enum class Tri { yes, no, unknown };
BigFloat zero_threshold();

ProjVec make_point(const BallVec& v);
ProjVec make_point(const GaussVec& v);
ProjVec make_point(const Vec3& v);
/// Lines use the same storage; exact real lines become primitive integers.
ProjVec make_line(const BallVec& v);
ProjVec make_line(const GaussVec& v);
ProjVec make_line(const Vec3& v);
ProjVec line_from_form(const HomPoly& l);

BallVec to_balls(const GaussVec& v);
CBall dot(const BallVec& a, const BallVec& b);
BallVec cross(const BallVec& a, const BallVec& b);
GaussRat dot(const GaussVec& a, const GaussVec& b);
GaussVec cross(const GaussVec& a, const GaussVec& b);
CBall det3(const BallVec& a, const BallVec& b, const BallVec& c);
GaussRat det3(const GaussVec& a, const GaussVec& b, const GaussVec& c);

/// a and b represent the same projective element.
Zero3 same(const ProjVec& a, const ProjVec& b);
/// Line through two points (or intersection of two lines); nullopt when they
/// coincide or cannot be separated at the current precision.
std::optional<ProjVec> join(const ProjVec& a, const ProjVec& b);
/// Incidence of a point and a line.
Zero3 incident(const ProjVec& point, const ProjVec& line);
/// Concurrency of three lines (or collinearity of three points).
Zero3 dependent(const ProjVec& a, const ProjVec& b, const ProjVec& c);

/// Value of p at the element (exact when available).
CBall eval_at(const HomPoly& p, const ProjVec& pt);
std::optional<GaussRat> eval_exact(const HomPoly& p, const ProjVec& pt);
/// Zero test of p at pt, exact when possible; scale from the coefficients.
Zero3 vanishes_at(const HomPoly& p, const ProjVec& pt);

/// Matrix times element (for tangency points adj(M) l).
ProjVec apply_matrix(const Mat3& m, const ProjVec& v, bool as_line = false);

GaussRat eval_gauss(const HomPoly& p, const GaussVec& z);
/// Sum of |coefficients|, used as a zero-test scale.
BigFloat coeff_scale(const HomPoly& p);

/// Sort key: lexicographic on the ball midpoints.
bool proj_less(const ProjVec& a, const ProjVec& b);

}  // namespace pcurves
