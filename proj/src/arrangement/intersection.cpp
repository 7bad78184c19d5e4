#include "pcurves/arrangement/intersection.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "pcurves/poly/resultant.hpp"
#include "pcurves/poly/roots.hpp"

namespace pcurves {

namespace {

// z = A w with A = [[1,0,0],[s,1,0],[t,u,1]]
struct Chart {
  int s = 0, t = 0, u = 0;

  std::array<HomPoly, 3> subs() const {
    return {z(0), z(0) * Rational(s) + z(1), z(0) * Rational(t) + z(1) * Rational(u) + z(2)};
  }
  GaussVec map(const GaussRat& a, const GaussRat& theta) const {
    return {a, GaussRat(s) * a + theta, GaussRat(t) * a + GaussRat(u) * theta + GaussRat(1)};
  }
  BallVec map(const CBall& a, const CBall& theta) const {
    return {a, CBall::exact(s) * a + theta, CBall::exact(t) * a + CBall::exact(u) * theta + CBall::exact(1)};
  }
};

std::vector<Chart> chart_candidates() {
  std::vector<Chart> out{{0, 0, 0}};
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<int> d(-7, 7);
  while (out.size() < 48) out.push_back({d(rng), d(rng), d(rng)});
  return out;
}

const std::vector<Chart>& charts() {
  static const std::vector<Chart> c = chart_candidates();
  return c;
}

struct Projection {
  Chart chart;
  BiPoly bp, bq;
  UniPoly res;
  std::vector<std::pair<int, UniPoly>> factors;
  int distinct = 0;
};

GaussRat eval_uni(const UniPoly& f, const GaussRat& x) {
  GaussRat acc(0);
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + GaussRat(*it);
  return acc;
}

mpz_class integer_lead(const UniPoly& f) {
  mpz_class den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  return abs(Rational(f.lc() * den).get_num());
}

// Exact root of f inside the ball, when it lies in Q(i). Denominators are
// bounded by the integer leading coefficient since L*theta is integral.
std::optional<GaussRat> recognize_root(const UniPoly& f, const CBall& ball, const mpz_class& max_den) {
  auto re = recognize_rational(ball.mid.re, ball.rad, max_den);
  auto im = recognize_rational(ball.mid.im, ball.rad, max_den);
  if (!re || !im) return std::nullopt;
  GaussRat g(*re, *im);
  if (!eval_uni(f, g).is_zero()) return std::nullopt;
  return g;
}

Rational binom(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

GaussRat gpow(const GaussRat& x, int k) {
  GaussRat r(1);
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

CBall bpow(const CBall& x, int k) {
  CBall r = CBall::exact(1);
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

// Fiber root over theta from the gcd S(x) = c (x - a)^j; false when the
// fiber holds more than one point or precision does not suffice.
bool fiber_point_exact(const BiPoly& S, int j, const GaussRat& theta, GaussRat& a) {
  std::vector<GaussRat> v;
  for (int i = 0; i <= j; ++i) v.push_back(eval_uni(S[i], theta));
  if (v[j].is_zero()) return false;
  a = -v[j - 1] / (GaussRat(Rational(j)) * v[j]);
  for (int i = 0; i < j; ++i)
    if (v[i] != v[j] * GaussRat(binom(j, i)) * gpow(-a, j - i)) return false;
  return true;
}

bool fiber_point_ball(const BiPoly& S, int j, const CBall& theta, CBall& a) {
  std::vector<CBall> v;
  for (int i = 0; i <= j; ++i) v.push_back(S[i].eval(theta));
  if (v[j].contains_zero()) return false;
  a = -v[j - 1] / (CBall::exact(j) * v[j]);
  BigFloat scale = v[j].abs_upper();
  for (int i = 0; i + 1 < j; ++i) {
    CBall diff = v[i] - v[j] * to_ball(binom(j, i)) * bpow(-a, j - i);
    if (decide_zero(diff, scale) != Zero3::zero) return false;
  }
  return true;
}

std::optional<Projection> make_projection(const HomPoly& p, const HomPoly& q, const Chart& ch) {
  const int m = p.degree(), n = q.degree();
  auto sub = ch.subs();
  HomPoly P = p.compose(sub), Q = q.compose(sub);
  if (P.coeff({m, 0, 0}) == 0 || Q.coeff({n, 0, 0}) == 0) return std::nullopt;
  Projection pr;
  pr.chart = ch;
  pr.bp = dehomogenize(P, 0);
  pr.bq = dehomogenize(Q, 0);
  pr.res = sylvester_resultant(pr.bp, pr.bq);
  if (pr.res.is_zero()) throw Error(ErrorCode::CommonComponent, "the curves share a component");
  if (pr.res.degree() < m * n) return std::nullopt;
  pr.factors = squarefree_decomposition(pr.res);
  for (const auto& [k, s] : pr.factors) pr.distinct += s.degree();
  return pr;
}

std::optional<std::vector<IntersectionRecord>> reconstruct(const HomPoly& p, const HomPoly& q, const Projection& pr) {
  const int m = p.degree(), n = q.degree();
  const int top = std::min(m, n);
  std::vector<IntersectionRecord> out;
  std::vector<BiPoly> sub(top + 1);
  for (const auto& [k, s] : pr.factors) {
    UniPoly rest = s.monic();
    for (int j = 1; rest.degree() > 0; ++j) {
      UniPoly here;
      const BiPoly* S;
      if (j >= top) {
        here = rest;
        rest = UniPoly::constant(1);
        S = m <= n ? &pr.bp : &pr.bq;
        j = top;
      } else {
        if (sub[j].empty()) sub[j] = subresultant(pr.bp, pr.bq, j);
        UniPoly g = gcd(rest, sub[j][j]);
        here = exact_div(rest, g);
        rest = g;
        S = &sub[j];
      }
      if (here.degree() <= 0) continue;
      if (j > k) return std::nullopt;
      std::vector<CBall> balls = isolate_roots(here);
      mpz_class max_den = integer_lead(here);
      for (const CBall& theta : balls) {
        IntersectionRecord rec;
        rec.multiplicity = k;
        std::optional<GaussRat> exact_theta = recognize_root(here, theta, max_den);
        bool done = false;
        if (exact_theta) {
          GaussRat a;
          if (!fiber_point_exact(*S, j, *exact_theta, a)) return std::nullopt;
          GaussVec zpt = pr.chart.map(a, *exact_theta);
          if (eval_gauss(p, zpt).is_zero() && eval_gauss(q, zpt).is_zero()) {
            rec.point = make_point(zpt);
            done = true;
          }
        }
        if (!done) {
          CBall a;
          if (!fiber_point_ball(*S, j, theta, a)) return std::nullopt;
          rec.point = make_point(pr.chart.map(a, theta));
        }
        out.push_back(std::move(rec));
      }
    }
  }
  return out;
}

std::optional<std::vector<IntersectionRecord>> try_intersect(const HomPoly& p, const HomPoly& q) {
  std::vector<Projection> cands;
  for (const Chart& ch : charts()) {
    if (auto pr = make_projection(p, q, ch)) cands.push_back(std::move(*pr));
    if (cands.size() == 4) break;
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Projection& a, const Projection& b) { return a.distinct > b.distinct; });
  for (const auto& pr : cands) {
    auto recs = reconstruct(p, q, pr);
    if (recs) return recs;
  }
  return std::nullopt;
}

}  // namespace

BallVec gradient_at(const HomPoly& p, const ProjVec& pt) {
  return {p.derivative(0).eval_ball(pt.ball), p.derivative(1).eval_ball(pt.ball), p.derivative(2).eval_ball(pt.ball)};
}

Zero3 singular_at(const HomPoly& p, const ProjVec& pt) {
  if (p.degree() == 1) return Zero3::nonzero;
  if (pt.exact) {
    for (int v = 0; v < 3; ++v)
      if (!eval_gauss(p.derivative(v), *pt.exact).is_zero()) return Zero3::nonzero;
    return Zero3::zero;
  }
  BallVec g = gradient_at(p, pt);
  bool unknown = false;
  for (int v = 0; v < 3; ++v) {
    Zero3 z = decide_zero(g[v], coeff_scale(p.derivative(v)));
    if (z == Zero3::nonzero) return Zero3::nonzero;
    if (z == Zero3::unknown) unknown = true;
  }
  return unknown ? Zero3::unknown : Zero3::zero;
}

std::vector<IntersectionRecord> intersection_points(const HomPoly& p, const HomPoly& q) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "intersection with the zero polynomial");
  if (p.degree() == 0 || q.degree() == 0) return {};
  for (long prec = working_precision();; prec *= 2) {
    PrecisionScope scope(prec);
    if (auto recs = try_intersect(p, q)) {
      for (auto& r : *recs)
        r.tangential = r.multiplicity >= 2 && singular_at(p, r.point) == Zero3::nonzero && singular_at(q, r.point) == Zero3::nonzero;
      std::sort(recs->begin(), recs->end(), [](const IntersectionRecord& a, const IntersectionRecord& b) { return proj_less(a.point, b.point); });
      return *recs;
    }
    if (prec * 2 > precision_cap()) throw Error(ErrorCode::PrecisionExhausted, "intersection points not separated at the precision cap");
  }
}

std::vector<ProjVec> common_zeros(const std::vector<HomPoly>& system, std::uint64_t seed) {
  std::vector<HomPoly> fs;
  for (const auto& f : system) {
    if (f.is_zero()) continue;
    if (f.degree() == 0) return {};
    fs.push_back(f);
  }
  if (fs.size() < 2) throw Error(ErrorCode::InfinitelyManySolutions, "fewer than two nonzero equations");
  int L = 1;
  for (const auto& f : fs) L = std::lcm(L, f.degree());
  std::vector<HomPoly> pw;
  for (const auto& f : fs) pw.push_back(f.pow(static_cast<unsigned>(L / f.degree())));

  for (long prec = working_precision();; prec *= 2) {
    PrecisionScope scope(prec);
    std::vector<IntersectionRecord> recs;
    bool found = false;
    for (int attempt = 0; attempt < 3 && !found; ++attempt) {
      HomPoly F = pw[0], G = pw[1];
      if (pw.size() > 2) {
        std::mt19937_64 rng(seed + attempt);
        std::uniform_int_distribution<int> d(1, 9);
        F = HomPoly();
        G = HomPoly();
        for (const auto& f : pw) {
          F += f * Rational(d(rng) * (rng() & 1 ? 1 : -1));
          G += f * Rational(d(rng) * (rng() & 1 ? 1 : -1));
        }
        if (F.is_zero() || G.is_zero()) continue;
      }
      try {
        recs = intersection_points(F, G);
        found = true;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::CommonComponent) throw;
        if (pw.size() == 2) break;
      }
    }
    if (!found) throw Error(ErrorCode::InfinitelyManySolutions, "the system has a common curve");
    std::vector<ProjVec> out;
    bool unsure = false;
    for (const auto& r : recs) {
      bool all = true;
      for (const auto& f : fs) {
        Zero3 zf = vanishes_at(f, r.point);
        if (zf == Zero3::nonzero) all = false;
        if (zf == Zero3::unknown) unsure = true;
      }
      if (all) out.push_back(r.point);
    }
    if (!unsure) return out;
    if (prec * 2 > precision_cap()) throw Error(ErrorCode::PrecisionExhausted, "common zeros undecided at the precision cap");
  }
}

ProjVec tangent_line(const HomPoly& p, const ProjVec& pt) {
  if (vanishes_at(p, pt) == Zero3::nonzero) throw Error(ErrorCode::NotOnCurve, "point " + pt.to_string() + " is not on the curve");
  if (singular_at(p, pt) != Zero3::nonzero) throw Error(ErrorCode::SingularPoint, "gradient vanishes at " + pt.to_string());
  if (pt.exact) {
    GaussVec g;
    for (int v = 0; v < 3; ++v) g[v] = eval_gauss(p.derivative(v), *pt.exact);
    return make_line(g);
  }
  return make_line(gradient_at(p, pt));
}

HomPoly tangent_form(const HomPoly& p, const ProjVec& pt) {
  ProjVec l = tangent_line(p, pt);
  if (!l.is_rational()) throw Error(ErrorCode::InvalidArgument, "tangent is not defined over Q");
  return linear_form(l.rational());
}

namespace {

template <typename T>
std::vector<T> restrict_generic(const HomPoly& p, const std::array<T, 3>& P, const std::array<T, 3>& X, T zero, T one) {
  const int d = p.degree();
  using Poly = std::vector<T>;
  auto mul = [&](const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, zero);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t k = 0; k < b.size(); ++k) r[i + k] = r[i + k] + a[i] * b[k];
    return r;
  };
  std::vector<T> out(d + 1, zero);
  for (const auto& [e, c] : p.terms()) {
    Poly m{one};
    for (int v = 0; v < 3; ++v)
      for (int k = 0; k < e[v]; ++k) m = mul(m, Poly{P[v], X[v]});
    for (int i = 0; i <= d; ++i) out[i] = out[i] + T(c) * m[i];
  }
  return out;
}

}  // namespace

std::vector<CBall> restriction_coeffs(const HomPoly& p, const ProjVec& P, const ProjVec& X) {
  const int d = p.degree();
  std::vector<CBall> out(d + 1);
  for (const auto& [e, c] : p.terms()) {
    std::vector<CBall> m{CBall::exact(1)};
    for (int v = 0; v < 3; ++v)
      for (int k = 0; k < e[v]; ++k) {
        std::vector<CBall> r(m.size() + 1);
        for (std::size_t i = 0; i < m.size(); ++i) {
          r[i] = r[i] + m[i] * P.ball[v];
          r[i + 1] = r[i + 1] + m[i] * X.ball[v];
        }
        m = std::move(r);
      }
    CBall cb = to_ball(c);
    for (int i = 0; i <= d; ++i) out[i] = out[i] + cb * m[i];
  }
  return out;
}

std::vector<GaussRat> restriction_coeffs_exact(const HomPoly& p, const GaussVec& P, const GaussVec& X) {
  return restrict_generic<GaussRat>(p, P, X, GaussRat(0), GaussRat(1));
}

Tri meets_only_at(const HomPoly& p, const ProjVec& P, const ProjVec& X) {
  const int d = p.degree();
  if (P.exact && X.exact) {
    auto c = restriction_coeffs_exact(p, *P.exact, *X.exact);
    for (int i = 0; i < d; ++i)
      if (!c[i].is_zero()) return Tri::no;
    return c[d].is_zero() ? Tri::no : Tri::yes;
  }
  auto c = restriction_coeffs(p, P, X);
  BigFloat scale = coeff_scale(p);
  bool unknown = false;
  for (int i = 0; i < d; ++i) {
    Zero3 z = decide_zero(c[i], scale);
    if (z == Zero3::nonzero) return Tri::no;
    if (z == Zero3::unknown) unknown = true;
  }
  Zero3 last = decide_zero(c[d], scale);
  if (last == Zero3::zero) return Tri::no;
  if (unknown || last == Zero3::unknown) return Tri::unknown;
  return Tri::yes;
}

}  // namespace pcurves
