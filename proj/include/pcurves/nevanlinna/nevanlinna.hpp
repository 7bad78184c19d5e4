#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pcurves/nevanlinna/expcurve.hpp"

namespace pcurves {

/// Base radius for counting functions and the Euclidean normalization.
inline constexpr double kR0 = 1.0;

enum class Norm {
  cartan,     ///< (1/2pi) int log max|g_j| - log max|g_j(0)|
  euclidean,  ///< (1/4pi) int log sum|g_j|^2, minus the same at r0
};

struct CharValue {
  double value = 0;
  double error = 0;
};

/// T(f, r). Throws QuadratureFailure, InvalidArgument (r < r0).
CharValue characteristic(const ExpCurve& f, double r, Norm norm = Norm::cartan);
/// T_0(g, r) = (1/2pi) int log+ |g|, for entire g.
CharValue scalar_characteristic(const ExpSum& g, double r);

struct GrowthSample {
  std::vector<double> radii;
  std::vector<double> values;
  std::vector<double> errors;
  /// Nondecreasing up to the reported errors.
  bool monotone() const;
};

GrowthSample sample_growth(const ExpCurve& f, const std::vector<double>& radii, Norm norm = Norm::cartan);

struct OrderEstimate {
  double value = 0;
  bool degenerate = false;
  int points = 0;
};

/// Slope of log T against log r over the top decade. Throws InsufficientSpan
/// (fewer than 8 radii or less than two decades).
OrderEstimate order_estimate(const GrowthSample& s);

struct Zero {
  cplx z;
  int multiplicity = 1;
};

struct CountingSample {
  HomPoly divisor;
  double radius = 0;
  std::vector<Zero> zeros;  ///< |z| <= radius, by modulus
  int perturbations = 0;

  int n(double t) const;
  /// sum_{r0<|a|<=r} log(r/|a|) + n(r0) log(r/r0), for r <= radius.
  double N(double r) const;
};

/// Zeros of P o f in |xi| <= r by argument-principle subdivision.
/// Throws DivisorContainsCurve, ZeroOnContour.
CountingSample counting(const ExpCurve& f, const HomPoly& divisor, double r);
/// Same for an explicit entire function.
std::vector<Zero> zeros_in_disk(const ExpSum& g, double r, int* perturbations = nullptr);

/// Winding number of g around the rectangle; throws ZeroOnContour.
int winding_number(const ExpSum& g, double x0, double x1, double y0, double y1);

/// Convex-hull perimeter of the points over 2pi (a segment counts twice).
double ahlfors_limit(const std::vector<cplx>& leading, int lambda);

enum class MainKind { first, second };

struct MainTheoremOptions {
  double exceptional_fraction = 0.05;
  double c_max = 3.0;
};

struct MainTheoremReport {
  MainKind kind = MainKind::first;
  std::vector<double> radii;
  std::vector<double> T;
  /// FMT: d*T - N for the first divisor. SMT: sum N - (q-n-1) T.
  std::vector<std::vector<double>> N;
  std::vector<double> slack;
  double fitted_c = 0;  ///< smallest C with slack >= -C log r off the exceptional set
  double abs_c = 0;     ///< smallest C with |slack| <= C log r off the exceptional set
  double variation = 0;
  int exceptional = 0;
  bool pass = false;
  std::string detail;
};

/// Throws DegenerateCurve, NotGeneralPosition (SMT), DivisorContainsCurve.
MainTheoremReport main_theorem_check(const ExpCurve& f, const std::vector<HomPoly>& divisors, MainKind kind,
                                     const std::vector<double>& radii, const MainTheoremOptions& opt = {});

struct FunctorialityReport {
  int p = 0;
  std::vector<double> radii;
  std::vector<double> difference;  ///< T(R o f) - p T(f)
  double variation = 0;
  bool pass = false;
};

/// Throws NotAMorphism, DegreeMismatch.
FunctorialityReport functoriality_check(const ExpCurve& f, const std::vector<HomPoly>& morphism, const std::vector<double>& radii,
                                        double tolerance = 0.1);

struct DefectEstimate {
  int degree = 0;
  std::vector<double> radii;
  std::vector<double> ratios;  ///< 1 - N/(dT)
  double value = 1;
  double window_start = 0;
  bool no_zeros = false;
};

DefectEstimate defect_estimate(const ExpCurve& f, const HomPoly& divisor, const std::vector<double>& radii);

/// g_i = exp(alpha_i xi^2 + beta_i xi + gamma_i).
struct ThreeQuadricsData {
  std::array<cplx, 3> beta{};
  std::array<cplx, 3> gamma{};
};

struct LimitCheck {
  std::string map;
  double expected = 0;
  double observed = 0;
  double rel_error = 0;
  bool pass = false;
};

struct ThreeQuadricsReport {
  std::array<cplx, 3> alphas{};
  double X = 0;
  double lhs = 0;
  double rhs = 0;
  bool contradiction = false;
  double radius = 0;
  std::vector<LimitCheck> checks;
};

/// X = (|a1-a2|+|a1-a3|+|a2-a3|)/2pi, LHS = 9X, RHS = 8X. With cross_check,
/// T/r^2 of the pair and triple maps at radius r is compared with the limits.
ThreeQuadricsReport three_quadrics_certificate(const std::array<cplx, 3>& alphas, const std::optional<ThreeQuadricsData>& data = std::nullopt,
                                               bool cross_check = true, double r = 20, double tolerance = 0.01);

}  // namespace pcurves
