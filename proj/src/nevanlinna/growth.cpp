#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>
#include <numbers>

#include "pcurves/error.hpp"
#include "pcurves/nevanlinna/nevanlinna.hpp"

namespace pcurves {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

int max_degree(const ExpCurve& f) {
  int d = 1;
  for (const auto& g : f.components)
    for (const auto& t : g.terms()) d = std::max(d, t.exponent.degree());
  return d;
}

// Angles where the largest branch changes, found on a grid and refined by bisection.
std::vector<double> switch_points(const std::function<std::vector<double>(double)>& branches, int grid) {
  auto top = [](const std::vector<double>& v) { return static_cast<int>(std::max_element(v.begin(), v.end()) - v.begin()); };
  std::vector<double> out;
  const double step = kTwoPi / grid;
  int prev = top(branches(0));
  for (int k = 1; k <= grid; ++k) {
    int cur = top(branches(k * step));
    if (cur != prev) {
      double lo = (k - 1) * step, hi = k * step;
      for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        auto v = branches(mid);
        (v[prev] >= v[cur] ? lo : hi) = mid;
      }
      out.push_back(0.5 * (lo + hi));
    }
    prev = cur;
  }
  return out;
}

// (1/2pi) int_0^{2pi} h, adaptive Gauss-Kronrod on uniform pieces split further at `breaks`.
CharValue circle_mean(const std::function<double(double)>& h, int pieces, std::vector<double> breaks = {}) {
  using boost::math::quadrature::gauss_kronrod;
  for (int k = 0; k <= pieces; ++k) breaks.push_back(kTwoPi * k / pieces);
  std::sort(breaks.begin(), breaks.end());
  CharValue out;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    if (breaks[k + 1] - breaks[k] < 1e-14) continue;
    double err = 0;
    out.value += gauss_kronrod<double, 31>::integrate(h, breaks[k], breaks[k + 1], 10, 1e-11, &err);
    out.error += err;
  }
  out.value /= kTwoPi;
  out.error /= kTwoPi;
  return out;
}

void require_finite(const CharValue& v, double r) {
  if (!std::isfinite(v.value) || !std::isfinite(v.error) || v.error > 1e-6 * (1 + std::abs(v.value)))
    throw Error(ErrorCode::QuadratureFailure, "circle quadrature did not converge at r = " + std::to_string(r));
}

}  // namespace

CharValue characteristic(const ExpCurve& f, double r, Norm norm) {
  if (!(r >= kR0)) throw Error(ErrorCode::InvalidArgument, "radius below r0");
  const int pieces = 32 * max_degree(f);
  CharValue v;
  if (norm == Norm::cartan) {
    auto branches = [&](double t) {
      std::vector<double> v;
      for (const auto& g : f.components)
        if (!g.is_zero()) v.push_back(g.log_abs(std::polar(r, t)));
      return v;
    };
    v = circle_mean([&](double t) { return f.log_max(std::polar(r, t)); }, pieces, switch_points(branches, 64 * pieces));
    v.value -= f.log_max(0.0);
  } else {
    auto at = [&](double rho) { return circle_mean([&](double t) { return 0.5 * f.log_norm2(std::polar(rho, t)); }, pieces); };
    CharValue a = at(r), b = at(kR0);
    v = {a.value - b.value, a.error + b.error};
  }
  require_finite(v, r);
  return v;
}

CharValue scalar_characteristic(const ExpSum& g, double r) {
  int d = 1;
  for (const auto& t : g.terms()) d = std::max(d, t.exponent.degree());
  auto branches = [&](double t) { return std::vector<double>{0.0, g.log_abs(std::polar(r, t))}; };
  CharValue v = circle_mean([&](double t) { return std::max(0.0, g.log_abs(std::polar(r, t))); }, 32 * d, switch_points(branches, 2048 * d));
  require_finite(v, r);
  return v;
}

bool GrowthSample::monotone() const {
  for (std::size_t i = 0; i + 1 < values.size(); ++i)
    if (values[i + 1] < values[i] - errors[i] - errors[i + 1] - 1e-9) return false;
  return true;
}

GrowthSample sample_growth(const ExpCurve& f, const std::vector<double>& radii, Norm norm) {
  GrowthSample s;
  for (double r : radii) {
    CharValue v = characteristic(f, r, norm);
    s.radii.push_back(r);
    s.values.push_back(v.value);
    s.errors.push_back(v.error);
  }
  return s;
}

OrderEstimate order_estimate(const GrowthSample& s) {
  const std::size_t n = s.radii.size();
  if (n < 8 || s.values.size() != n) throw Error(ErrorCode::InsufficientSpan, "need at least 8 radii");
  double lo = *std::min_element(s.radii.begin(), s.radii.end()), hi = *std::max_element(s.radii.begin(), s.radii.end());
  if (!(lo > 0) || hi / lo < 100) throw Error(ErrorCode::InsufficientSpan, "radii must span two decades");
  OrderEstimate out;
  if (std::all_of(s.values.begin(), s.values.end(), [](double v) { return std::abs(v) < 1e-9; })) {
    out.degenerate = true;
    return out;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (s.radii[i] < hi / 10 || s.values[i] <= 0) continue;
    double x = std::log(s.radii[i]), y = std::log(s.values[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++out.points;
  }
  if (out.points < 2) throw Error(ErrorCode::InsufficientSpan, "fewer than two positive samples in the top decade");
  double m = out.points;
  out.value = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return out;
}

double ahlfors_limit(const std::vector<cplx>& leading, int lambda) {
  if (lambda < 1) throw Error(ErrorCode::InvalidArgument, "lambda must be positive");
  std::vector<cplx> p = leading;
  auto less = [](cplx a, cplx b) { return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag()); };
  std::sort(p.begin(), p.end(), less);
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() < 2) return 0;
  auto cross = [](cplx o, cplx a, cplx b) { return (a - o).real() * (b - o).imag() - (a - o).imag() * (b - o).real(); };
  std::vector<cplx> hull(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p[i]) <= 0) --k;
    hull[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], p[i]) <= 0) --k;
    hull[k++] = p[i];
  }
  hull.resize(k - 1);
  double len = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) len += std::abs(hull[(i + 1) % hull.size()] - hull[i]);
  return len / kTwoPi;
}

}  // namespace pcurves
