#include <algorithm>
#include <cmath>
#include <numbers>

#include "pcurves/error.hpp"
#include "pcurves/nevanlinna/nevanlinna.hpp"

namespace pcurves {

namespace {

constexpr double kPi = std::numbers::pi;

struct OnContour {};

double wrap(double a) {
  a = std::remainder(a, 2 * kPi);
  return a;
}

class Winder {
 public:
  explicit Winder(const ExpSum& g) : g_(g) {
    for (const auto& t : g.terms()) d_.push_back(t.exponent.derivative());
  }

  double phase(cplx xi) const {
    auto s = g_.eval(xi);
    if (!(std::abs(s.value) > 1e-11 * s.magnitude)) throw OnContour{};
    return std::arg(s.value);
  }

  double speed(cplx xi) const {
    double m = 0;
    for (const auto& d : d_) m = std::max(m, std::abs(d(xi)));
    return m;
  }

  double segment(cplx a, cplx b, double pa, double pb, int depth) const {
    cplx m = 0.5 * (a + b);
    double pm = phase(m);
    double d1 = wrap(pm - pa), d2 = wrap(pb - pm), d = wrap(pb - pa);
    if (std::abs(d1) < 0.5 && std::abs(d2) < 0.5 && std::abs(d1 + d2 - d) < 1e-9) return d1 + d2;
    if (depth > 48) throw OnContour{};
    return segment(a, m, pa, pm, depth + 1) + segment(m, b, pm, pb, depth + 1);
  }

  double edge(cplx a, cplx b) const {
    double len = std::abs(b - a);
    double sp = std::max({speed(a), speed(b), speed(0.5 * (a + b))});
    int pieces = static_cast<int>(std::min(1e6, std::ceil(len * sp / 0.4))) + 2;
    double total = 0;
    cplx prev = a;
    double pprev = phase(a);
    for (int k = 1; k <= pieces; ++k) {
      cplx next = a + (b - a) * (static_cast<double>(k) / pieces);
      double pnext = phase(next);
      total += segment(prev, next, pprev, pnext, 0);
      prev = next;
      pprev = pnext;
    }
    return total;
  }

  int winding(double x0, double x1, double y0, double y1) const {
    cplx c[4] = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
    double total = 0;
    for (int k = 0; k < 4; ++k) total += edge(c[k], c[(k + 1) % 4]);
    double w = total / (2 * kPi);
    long r = std::lround(w);
    if (std::abs(w - r) > 1e-6) throw OnContour{};
    return static_cast<int>(r);
  }

  bool newton(cplx& z) const {
    for (int it = 0; it < 80; ++it) {
      auto s = g_.eval(z);
      if (s.deriv == cplx(0)) return false;
      cplx step = s.value / s.deriv;
      z -= step;
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
      if (std::abs(step) < 1e-14 * std::max(1.0, std::abs(z))) return true;
    }
    return false;
  }

 private:
  const ExpSum& g_;
  std::vector<XiPoly> d_;
};

struct Search {
  const Winder& w;
  double min_box;
  std::vector<Zero> out;
  int perturbations = 0;

  void run(double x0, double x1, double y0, double y1, int count) {
    if (count <= 0) return;
    double size = std::max(x1 - x0, y1 - y0);
    if (count == 1 && size < 1.0) {
      cplx z{0.5 * (x0 + x1), 0.5 * (y0 + y1)};
      double m = 1e-9 * size;
      if (w.newton(z) && z.real() >= x0 - m && z.real() <= x1 + m && z.imag() >= y0 - m && z.imag() <= y1 + m) {
        out.push_back({z, 1});
        return;
      }
    }
    if (size < min_box) {
      out.push_back({{0.5 * (x0 + x1), 0.5 * (y0 + y1)}, count});
      return;
    }
    static constexpr double offsets[] = {0.0123, -0.0311, 0.0457, -0.0619, 0.0871, -0.1093};
    for (double off : offsets) {
      double xm = x0 + (0.5 + off) * (x1 - x0), ym = y0 + (0.5 - 0.7 * off) * (y1 - y0);
      try {
        int c[4] = {w.winding(x0, xm, y0, ym), w.winding(xm, x1, y0, ym), w.winding(x0, xm, ym, y1), w.winding(xm, x1, ym, y1)};
        if (c[0] + c[1] + c[2] + c[3] != count || std::min({c[0], c[1], c[2], c[3]}) < 0) {
          ++perturbations;
          continue;
        }
        run(x0, xm, y0, ym, c[0]);
        run(xm, x1, y0, ym, c[1]);
        run(x0, xm, ym, y1, c[2]);
        run(xm, x1, ym, y1, c[3]);
        return;
      } catch (const OnContour&) {
        ++perturbations;
      }
    }
    throw Error(ErrorCode::ZeroOnContour, "subdivision kept meeting a zero near (" + format_complex({0.5 * (x0 + x1), 0.5 * (y0 + y1)}) + ")");
  }
};

}  // namespace

int winding_number(const ExpSum& g, double x0, double x1, double y0, double y1) {
  try {
    return Winder(g).winding(x0, x1, y0, y1);
  } catch (const OnContour&) {
    throw Error(ErrorCode::ZeroOnContour, "contour passes through a zero");
  }
}

std::vector<Zero> zeros_in_disk(const ExpSum& g, double r, int* perturbations) {
  if (g.is_zero()) throw Error(ErrorCode::DivisorContainsCurve, "the function vanishes identically");
  if (g.terms().size() == 1) return {};
  Winder w(g);
  Search s{w, 1e-9 * std::max(1.0, r), {}, 0};
  bool done = false;
  for (int k = 0; k < 8 && !done; ++k) {
    double R = r * (1.0 + 1e-3 + 0.0137 * k) + 1e-3;
    try {
      int total = w.winding(-R, R, -R * 1.0007, R * 1.0007);
      s.run(-R, R, -R * 1.0007, R * 1.0007, total);
      done = true;
    } catch (const OnContour&) {
      ++s.perturbations;
      s.out.clear();
    }
  }
  if (!done) throw Error(ErrorCode::ZeroOnContour, "outer contour kept meeting zeros");
  if (perturbations) *perturbations = s.perturbations;
  std::vector<Zero> in;
  for (const auto& z : s.out)
    if (std::abs(z.z) <= r * (1 + 1e-12)) in.push_back(z);
  std::sort(in.begin(), in.end(), [](const Zero& a, const Zero& b) {
    double ma = std::abs(a.z), mb = std::abs(b.z);
    return ma != mb ? ma < mb : std::arg(a.z) < std::arg(b.z);
  });
  return in;
}

int CountingSample::n(double t) const {
  int c = 0;
  for (const auto& z : zeros)
    if (std::abs(z.z) <= t) c += z.multiplicity;
  return c;
}

double CountingSample::N(double r) const {
  if (r > radius * (1 + 1e-12)) throw Error(ErrorCode::InvalidArgument, "N(r) requested beyond the sampled radius");
  double acc = n(kR0) * std::log(r / kR0);
  for (const auto& z : zeros) {
    double m = std::abs(z.z);
    if (m > kR0 && m <= r) acc += z.multiplicity * std::log(r / m);
  }
  return acc;
}

CountingSample counting(const ExpCurve& f, const HomPoly& divisor, double r) {
  if (!(r >= kR0)) throw Error(ErrorCode::InvalidArgument, "radius below r0");
  ExpSum g = compose(divisor, f);
  if (g.is_zero()) throw Error(ErrorCode::DivisorContainsCurve, "the curve lies in the divisor");
  CountingSample s;
  s.divisor = divisor;
  s.radius = r;
  s.zeros = zeros_in_disk(g, r, &s.perturbations);
  return s;
}

}  // namespace pcurves
