#include <algorithm>
#include <cmath>
#include <numbers>

#include "pcurves/arrangement/intersection.hpp"
#include "pcurves/error.hpp"
#include "pcurves/nevanlinna/nevanlinna.hpp"
#include "pcurves/poly/quadric.hpp"

namespace pcurves {

namespace {

void check_radii(const std::vector<double>& radii) {
  if (radii.empty()) throw Error(ErrorCode::InvalidArgument, "no radii");
  for (double r : radii)
    if (!(r >= kR0)) throw Error(ErrorCode::InvalidArgument, "radius below r0");
}

// Smallest C with value <= C log r after dropping the worst `drop` radii.
double fit_log_constant(const std::vector<double>& radii, const std::vector<double>& excess, int drop) {
  std::vector<double> ratios;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    double lr = std::log(radii[i]);
    if (lr <= 0) continue;
    ratios.push_back(std::max(0.0, excess[i]) / lr);
  }
  std::sort(ratios.rbegin(), ratios.rend());
  std::size_t k = std::min<std::size_t>(drop, ratios.size());
  return k < ratios.size() ? ratios[k] : 0.0;
}

bool all_linear(const std::vector<HomPoly>& h) {
  return std::all_of(h.begin(), h.end(), [](const HomPoly& p) { return p.degree() == 1; });
}

void check_general_position(const std::vector<HomPoly>& h, int n) {
  if (!all_linear(h)) throw Error(ErrorCode::NotGeneralPosition, "hyperplanes must be linear forms");
  std::vector<Vec3> v;
  for (const auto& p : h) v.push_back(linear_coeffs(p));
  const int q = static_cast<int>(v.size());
  if (n == 1) {
    for (int i = 0; i < q; ++i)
      for (int j = i + 1; j < q; ++j)
        if (v[i][0] * v[j][1] - v[i][1] * v[j][0] == 0)
          throw Error(ErrorCode::NotGeneralPosition, "hyperplanes " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
    return;
  }
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j)
      for (int k = j + 1; k < q; ++k)
        if (det(Mat3{v[i], v[j], v[k]}) == 0)
          throw Error(ErrorCode::NotGeneralPosition,
                      "hyperplanes " + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + " are concurrent");
}

}  // namespace

MainTheoremReport main_theorem_check(const ExpCurve& f, const std::vector<HomPoly>& divisors, MainKind kind,
                                     const std::vector<double>& radii, const MainTheoremOptions& opt) {
  check_radii(radii);
  if (divisors.empty()) throw Error(ErrorCode::InvalidArgument, "no divisors");
  const int n = f.dim();
  if (kind == MainKind::second) {
    if (!linearly_nondegenerate(f)) throw Error(ErrorCode::DegenerateCurve, "the components satisfy a linear relation");
    check_general_position(divisors, n);
  }
  MainTheoremReport rep;
  rep.kind = kind;
  rep.radii = radii;
  const double rmax = *std::max_element(radii.begin(), radii.end());
  std::vector<CountingSample> cs;
  for (const auto& d : divisors) cs.push_back(counting(f, d, rmax));
  for (double r : radii) {
    double t = characteristic(f, r).value;
    rep.T.push_back(t);
    std::vector<double> ns;
    for (const auto& c : cs) ns.push_back(c.N(r));
    double slack;
    if (kind == MainKind::first) {
      slack = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < divisors.size(); ++i) slack = std::min(slack, divisors[i].degree() * t - ns[i]);
    } else {
      double sum = 0;
      for (double x : ns) sum += x;
      slack = sum - (static_cast<double>(divisors.size()) - n - 1) * t;
    }
    rep.N.push_back(ns);
    rep.slack.push_back(slack);
  }
  rep.exceptional = static_cast<int>(std::floor(opt.exceptional_fraction * radii.size()));
  std::vector<double> neg, mag;
  for (double s : rep.slack) {
    neg.push_back(-s);
    mag.push_back(std::abs(s));
  }
  rep.fitted_c = fit_log_constant(radii, neg, rep.exceptional);
  rep.abs_c = fit_log_constant(radii, mag, rep.exceptional);
  auto [lo, hi] = std::minmax_element(rep.slack.begin(), rep.slack.end());
  rep.variation = *hi - *lo;
  rep.pass = rep.fitted_c <= opt.c_max;
  rep.detail = std::string(kind == MainKind::first ? "slack = d T - N" : "slack = sum N - (q-n-1) T") + "; fitted C = " + std::to_string(rep.fitted_c);
  return rep;
}

FunctorialityReport functoriality_check(const ExpCurve& f, const std::vector<HomPoly>& morphism, const std::vector<double>& radii,
                                        double tolerance) {
  check_radii(radii);
  if (morphism.empty()) throw Error(ErrorCode::InvalidArgument, "empty morphism");
  FunctorialityReport rep;
  rep.p = morphism[0].degree();
  for (const auto& m : morphism)
    if (m.degree() != rep.p) throw Error(ErrorCode::DegreeMismatch, "morphism components must share a degree");
  std::vector<HomPoly> sys = morphism;
  if (f.dim() == 1) sys.push_back(z(2));
  try {
    auto base = common_zeros(sys);
    if (!base.empty()) throw Error(ErrorCode::NotAMorphism, "components share " + std::to_string(base.size()) + " common zero(s)");
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InfinitelyManySolutions) throw Error(ErrorCode::NotAMorphism, "components share a curve");
    if (e.code() != ErrorCode::NoSolution) throw;
  }
  ExpCurve g = compose(morphism, f);
  const double rmax = *std::max_element(radii.begin(), radii.end());
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (double r : radii) {
    double d = characteristic(g, r).value - rep.p * characteristic(f, r).value;
    rep.radii.push_back(r);
    rep.difference.push_back(d);
    if (r >= rmax / 10) {
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  }
  rep.variation = hi - lo;
  rep.pass = rep.variation < tolerance;
  return rep;
}

DefectEstimate defect_estimate(const ExpCurve& f, const HomPoly& divisor, const std::vector<double>& radii) {
  check_radii(radii);
  DefectEstimate est;
  est.degree = divisor.degree();
  const double rmax = *std::max_element(radii.begin(), radii.end());
  CountingSample cs = counting(f, divisor, rmax);
  est.no_zeros = cs.zeros.empty();
  est.window_start = rmax / std::sqrt(10.0);
  est.value = 1;
  bool any = false;
  for (double r : radii) {
    double t = characteristic(f, r).value;
    double ratio = est.no_zeros || t <= 0 ? 1.0 : 1.0 - cs.N(r) / (est.degree * t);
    est.radii.push_back(r);
    est.ratios.push_back(ratio);
    if (r >= est.window_start) {
      est.value = any ? std::min(est.value, ratio) : ratio;
      any = true;
    }
  }
  if (est.no_zeros) est.value = 1;
  return est;
}

ThreeQuadricsReport three_quadrics_certificate(const std::array<cplx, 3>& alphas, const std::optional<ThreeQuadricsData>& data, bool cross_check,
                                               double r, double tolerance) {
  ThreeQuadricsReport rep;
  rep.alphas = alphas;
  rep.X = (std::abs(alphas[0] - alphas[1]) + std::abs(alphas[0] - alphas[2]) + std::abs(alphas[1] - alphas[2])) / (2 * std::numbers::pi);
  rep.lhs = 9 * rep.X;
  rep.rhs = 8 * rep.X;
  rep.contradiction = rep.lhs > rep.rhs;
  rep.radius = r;
  if (!cross_check) return rep;
  ThreeQuadricsData d = data.value_or(ThreeQuadricsData{});
  auto exponent = [&](int i) { return XiPoly({d.gamma[i], d.beta[i], alphas[i]}); };
  auto check = [&](const std::vector<int>& idx, const std::string& name) {
    std::vector<XiPoly> e;
    std::vector<cplx> lead;
    for (int i : idx) {
      e.push_back(exponent(i));
      lead.push_back(alphas[i]);
    }
    LimitCheck c;
    c.map = name;
    c.expected = ahlfors_limit(lead, 2);
    c.observed = characteristic(ExpCurve::from_exponents(e, 2), r).value / (r * r);
    c.rel_error = c.expected > 0 ? std::abs(c.observed - c.expected) / c.expected : std::abs(c.observed);
    c.pass = c.rel_error <= tolerance;
    rep.checks.push_back(c);
  };
  check({0, 1}, "[g1:g2]");
  check({0, 2}, "[g1:g3]");
  check({1, 2}, "[g2:g3]");
  check({0, 1, 2}, "[g1:g2:g3]");
  return rep;
}

}  // namespace pcurves
