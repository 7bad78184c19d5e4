#include "pcurves/arrangement/projective.hpp"

#include <algorithm>

namespace pcurves {

namespace {

CBall real_ball(const BigFloat& mid, const BigFloat& rad) { return CBall(BigComplex(mid), rad); }

GaussVec first_to_one(GaussVec v) {
  int f = 0;
  while (f < 3 && v[f].is_zero()) ++f;
  if (f == 3) return v;
  GaussRat inv = GaussRat(1) / v[f];
  for (auto& x : v) x *= inv;
  return v;
}

Zero3 combine(std::initializer_list<Zero3> zs) {
  bool unknown = false;
  for (Zero3 z : zs) {
    if (z == Zero3::nonzero) return Zero3::nonzero;
    if (z == Zero3::unknown) unknown = true;
  }
  return unknown ? Zero3::unknown : Zero3::zero;
}

Zero3 exact_zero(const GaussRat& g) { return g.is_zero() ? Zero3::zero : Zero3::nonzero; }

}  // namespace

BigFloat zero_threshold() { return BigFloat::pow2(-working_precision() / 2); }

Zero3 decide_zero(const CBall& b, const BigFloat& scale) {
  if (!b.contains_zero()) return Zero3::nonzero;
  BigFloat s = scale < BigFloat(1) ? BigFloat(1) : scale;
  return b.rad <= zero_threshold() * s ? Zero3::zero : Zero3::unknown;
}

bool ProjVec::is_rational() const {
  if (!exact) return false;
  return std::all_of(exact->begin(), exact->end(), [](const GaussRat& g) { return g.is_real(); });
}

Vec3 ProjVec::rational() const { return {(*exact)[0].re, (*exact)[1].re, (*exact)[2].re}; }

std::array<std::string, 3> ProjVec::coord_strings(int digits) const {
  return {ball[0].mid.to_string(digits), ball[1].mid.to_string(digits), ball[2].mid.to_string(digits)};
}

std::string ProjVec::radius_string() const { return max(max(ball[0].rad, ball[1].rad), ball[2].rad).to_string(3); }

std::string ProjVec::to_string(int digits) const {
  if (exact) {
    return "[" + pcurves::to_string((*exact)[0]) + ":" + pcurves::to_string((*exact)[1]) + ":" +
           pcurves::to_string((*exact)[2]) + "]";
  }
  auto c = coord_strings(digits);
  return "[" + c[0] + ":" + c[1] + ":" + c[2] + "]";
}

BallVec to_balls(const GaussVec& v) { return {to_ball(v[0]), to_ball(v[1]), to_ball(v[2])}; }

ProjVec make_point(const BallVec& v) {
  int piv = 0;
  BigFloat best(-1);
  for (int k = 0; k < 3; ++k) {
    BigFloat a = abs(v[k].mid);
    if (a > best) {
      best = a;
      piv = k;
    }
  }
  ProjVec out;
  if (v[piv].contains_zero()) {
    out.ball = v;
    return out;
  }
  BallVec u;
  for (int k = 0; k < 3; ++k) u[k] = v[k] / v[piv];
  int f = 0;
  while (f < 3 && decide_zero(u[f]) == Zero3::zero) ++f;
  if (f == 3) f = piv;
  CBall uf = u[f];
  for (auto& x : u) x = x / uf;
  int big = 0;
  for (int k = 1; k < 3; ++k)
    if (abs(u[k].mid) > abs(u[big].mid)) big = k;
  CBall scale = real_ball(abs(u[big].mid), u[big].rad);
  for (auto& x : u) x = x / scale;
  out.ball = u;
  return out;
}

ProjVec make_point(const GaussVec& v) {
  ProjVec out;
  out.exact = first_to_one(v);
  out.ball = make_point(to_balls(*out.exact)).ball;
  return out;
}

ProjVec make_point(const Vec3& v) { return make_point(GaussVec{v[0], v[1], v[2]}); }

ProjVec make_line(const BallVec& v) { return make_point(v); }

ProjVec make_line(const Vec3& v) {
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::array<mpz_class, 3> ints;
  mpz_class g = 0;
  for (int k = 0; k < 3; ++k) {
    Rational s = v[k] * l;
    ints[k] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[k].get_mpz_t());
  }
  ProjVec out;
  if (g == 0) {
    out.exact = GaussVec{0, 0, 0};
    out.ball = to_balls(*out.exact);
    return out;
  }
  int f = 0;
  while (ints[f] == 0) ++f;
  if (ints[f] < 0) g = -g;
  GaussVec e;
  for (int k = 0; k < 3; ++k) e[k] = GaussRat(Rational(mpz_class(ints[k] / g)));
  out.exact = e;
  out.ball = make_point(to_balls(e)).ball;
  return out;
}

ProjVec make_line(const GaussVec& v) {
  if (std::all_of(v.begin(), v.end(), [](const GaussRat& g) { return g.is_real(); })) return make_line(Vec3{v[0].re, v[1].re, v[2].re});
  return make_point(v);
}

ProjVec line_from_form(const HomPoly& l) { return make_line(linear_coeffs(l)); }

CBall dot(const BallVec& a, const BallVec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

BallVec cross(const BallVec& a, const BallVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

GaussRat dot(const GaussVec& a, const GaussVec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

GaussVec cross(const GaussVec& a, const GaussVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

CBall det3(const BallVec& a, const BallVec& b, const BallVec& c) { return dot(a, cross(b, c)); }
GaussRat det3(const GaussVec& a, const GaussVec& b, const GaussVec& c) { return dot(a, cross(b, c)); }

Zero3 same(const ProjVec& a, const ProjVec& b) {
  if (a.exact && b.exact) {
    GaussVec c = cross(*a.exact, *b.exact);
    return combine({exact_zero(c[0]), exact_zero(c[1]), exact_zero(c[2])});
  }
  BallVec c = cross(a.ball, b.ball);
  return combine({decide_zero(c[0]), decide_zero(c[1]), decide_zero(c[2])});
}

std::optional<ProjVec> join(const ProjVec& a, const ProjVec& b) {
  if (same(a, b) != Zero3::nonzero) return std::nullopt;
  if (a.exact && b.exact) return make_line(cross(*a.exact, *b.exact));
  return make_line(cross(a.ball, b.ball));
}

Zero3 incident(const ProjVec& point, const ProjVec& line) {
  if (point.exact && line.exact) return exact_zero(dot(*point.exact, *line.exact));
  return decide_zero(dot(point.ball, line.ball));
}

Zero3 dependent(const ProjVec& a, const ProjVec& b, const ProjVec& c) {
  if (a.exact && b.exact && c.exact) return exact_zero(det3(*a.exact, *b.exact, *c.exact));
  return decide_zero(det3(a.ball, b.ball, c.ball));
}

GaussRat eval_gauss(const HomPoly& p, const GaussVec& z) {
  GaussRat acc(0);
  for (const auto& [e, c] : p.terms()) {
    GaussRat m(c);
    for (int v = 0; v < 3; ++v)
      for (int k = 0; k < e[v]; ++k) m *= z[v];
    acc += m;
  }
  return acc;
}

BigFloat coeff_scale(const HomPoly& p) {
  Rational s = 0;
  for (const auto& [e, c] : p.terms()) s += abs(c);
  return BigFloat(s);
}

CBall eval_at(const HomPoly& p, const ProjVec& pt) { return p.eval_ball(pt.ball); }

std::optional<GaussRat> eval_exact(const HomPoly& p, const ProjVec& pt) {
  if (!pt.exact) return std::nullopt;
  return eval_gauss(p, *pt.exact);
}

Zero3 vanishes_at(const HomPoly& p, const ProjVec& pt) {
  if (pt.exact) return exact_zero(eval_gauss(p, *pt.exact));
  return decide_zero(eval_at(p, pt), coeff_scale(p));
}

ProjVec apply_matrix(const Mat3& m, const ProjVec& v, bool as_line) {
  if (v.exact) {
    GaussVec r{0, 0, 0};
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) r[i] += GaussRat(m[i][k]) * (*v.exact)[k];
    return as_line ? make_line(r) : make_point(r);
  }
  BallVec r;
  for (int i = 0; i < 3; ++i) r[i] = to_ball(m[i][0]) * v.ball[0] + to_ball(m[i][1]) * v.ball[1] + to_ball(m[i][2]) * v.ball[2];
  return make_point(r);
}

bool proj_less(const ProjVec& a, const ProjVec& b) {
  for (int k = 0; k < 3; ++k) {
    const BigComplex& x = a.ball[k].mid;
    const BigComplex& y = b.ball[k].mid;
    if (!(x.re == y.re)) return x.re < y.re;
    if (!(x.im == y.im)) return x.im < y.im;
  }
  return false;
}

}  // namespace pcurves
