#include "pcurves/poly/roots.hpp"

#include <algorithm>
#include <cmath>

#include "pcurves/error.hpp"

namespace pcurves {

namespace {
long g_cap = 4096;

BigComplex horner(const std::vector<BigComplex>& c, const BigComplex& z) {
  BigComplex acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

bool ball_less(const CBall& a, const CBall& b) {
  if (a.mid.re != b.mid.re) return a.mid.re < b.mid.re;
  return a.mid.im < b.mid.im;
}
}  // namespace

long precision_cap() { return g_cap; }
void set_precision_cap(long bits) { g_cap = bits; }

bool isolate_roots_at(const UniPoly& f, std::vector<CBall>& out) {
  out.clear();
  const int n = f.degree();
  if (n <= 0) return true;
  if (n == 1) {
    Rational r = -f.coeff(0) / f.coeff(1);
    out.push_back(CBall::exact(r));
    return true;
  }
  const long prec = working_precision();
  std::vector<BigComplex> c;
  for (const auto& q : f.coeffs()) c.emplace_back(BigFloat(q));
  std::vector<BigComplex> dc;
  for (int k = 1; k <= n; ++k) dc.push_back(c[k] * BigComplex(BigFloat(k)));

  // Fujiwara bound for the starting circle
  double lc = std::abs(f.lc().get_d());
  double bound = 0;
  for (int k = 1; k <= n; ++k) {
    double a = std::abs(f.coeff(n - k).get_d()) / lc;
    if (k == n) a /= 2;
    bound = std::max(bound, std::pow(a, 1.0 / k));
  }
  bound = 2 * bound + 1e-3;
  std::vector<BigComplex> z;
  for (int k = 0; k < n; ++k) {
    double ang = 2 * M_PI * k / n + 0.4;
    z.emplace_back(BigFloat(bound * std::cos(ang)), BigFloat(bound * std::sin(ang)));
  }

  BigFloat tol = BigFloat::pow2(-prec + 16);
  const int max_iter = 200 + static_cast<int>(prec);
  for (int it = 0; it < max_iter; ++it) {
    BigFloat worst(0);
    for (int i = 0; i < n; ++i) {
      BigComplex fz = horner(c, z[i]);
      if (fz.is_zero()) continue;
      BigComplex w = fz / horner(dc, z[i]);
      BigComplex s(0);
      for (int j = 0; j < n; ++j)
        if (j != i) s += BigComplex(1) / (z[i] - z[j]);
      BigComplex step = w / (BigComplex(1) - w * s);
      z[i] -= step;
      BigFloat rel = abs(step) / (BigFloat(1) + abs(z[i]));
      if (worst < rel) worst = rel;
    }
    if (worst < tol) break;
  }

  // Gerschgorin-type inclusion from Weierstrass corrections
  std::vector<CBall> zb;
  for (const auto& x : z) zb.emplace_back(x, BigFloat(0));
  CBall lcb = to_ball(f.lc());
  std::vector<BigFloat> rad(n);
  for (int i = 0; i < n; ++i) {
    CBall fz = f.eval(zb[i]);
    CBall den = lcb;
    for (int j = 0; j < n; ++j)
      if (j != i) den = den * (zb[i] - zb[j]);
    if (den.contains_zero()) return false;
    CBall w = fz / den;
    rad[i] = mul_up(w.abs_upper(), BigFloat(n));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      BigFloat d = (zb[i] - zb[j]).abs_lower();
      if (d <= add_up(rad[i], rad[j])) return false;
    }
  for (int i = 0; i < n; ++i) out.emplace_back(z[i], rad[i]);
  std::sort(out.begin(), out.end(), ball_less);
  return true;
}

std::vector<CBall> isolate_roots(const UniPoly& f) {
  std::vector<CBall> out;
  for (long p = working_precision(); p <= g_cap; p *= 2) {
    PrecisionScope scope(p);
    if (isolate_roots_at(f, out)) return out;
  }
  throw Error(ErrorCode::PrecisionExhausted, "root isolation failed at the precision cap");
}

std::vector<UniRoot> roots_with_multiplicity(const UniPoly& f) {
  std::vector<UniRoot> out;
  for (const auto& [k, s] : squarefree_decomposition(f)) {
    std::vector<Rational> rr = rational_roots(s);
    for (const auto& ball : isolate_roots(s)) {
      UniRoot r;
      r.z = ball;
      r.multiplicity = k;
      for (const auto& q : rr)
        if ((ball - to_ball(q)).abs_lower().is_zero()) {
          r.exact = q;
          r.z = to_ball(q);
        }
      out.push_back(std::move(r));
    }
  }
  std::sort(out.begin(), out.end(), [](const UniRoot& a, const UniRoot& b) { return ball_less(a.z, b.z); });
  return out;
}

std::vector<Rational> rational_roots(const UniPoly& f_in) {
  // recognized from isolated roots, then verified exactly
  std::vector<Rational> out;
  if (f_in.degree() <= 0) return out;
  UniPoly f = f_in;
  if (f.coeff(0) == 0) {
    out.push_back(0);
    std::vector<Rational> c = f.coeffs();
    while (!c.empty() && c.front() == 0) c.erase(c.begin());
    f = UniPoly(c);
  }
  if (f.degree() <= 0) return out;
  // strip to squarefree part to keep candidates unique
  UniPoly g = gcd(f, f.derivative());
  if (g.degree() > 0) f = exact_div(f, g);
  std::vector<CBall> balls = isolate_roots(f);
  mpz_class den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  mpz_class lead = Rational(f.lc() * den).get_num();
  mpz_class max_den = abs(lead);
  for (const auto& b : balls) {
    if (!b.mid.im.is_zero() && b.rad < abs(b.mid.im)) continue;
    auto q = recognize_rational(b.mid.re, b.rad, max_den);
    if (q && f.eval(*q) == 0) out.push_back(*q);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace pcurves
