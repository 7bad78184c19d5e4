#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "pcurves/poly/parse.hpp"
#include "pcurves/poly/quadric.hpp"
#include "pcurves/poly/resultant.hpp"
#include "pcurves/poly/roots.hpp"
#include "support.hpp"

using namespace pcurves;
using testsupport::random_form;

namespace {

// Leibniz expansion of the Sylvester matrix with HomPoly entries, used as an
// independent check of the Bareiss route.
HomPoly leibniz_resultant(const HomPoly& p, const HomPoly& q, int v) {
  auto coeffs_in = [v](const HomPoly& f) {
    std::vector<HomPoly> c(f.degree() + 1);
    for (const auto& [e, k] : f.terms()) {
      Exponent r = e;
      r[v] = 0;
      c[e[v]] += HomPoly::monomial(r, k);
    }
    return c;
  };
  auto pc = coeffs_in(p);
  auto qc = coeffs_in(q);
  int m = p.degree(), n = q.degree(), N = m + n;
  std::vector<std::vector<HomPoly>> M(N, std::vector<HomPoly>(N));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) M[r][r + (m - k)] = pc[k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) M[n + r][r + (n - k)] = qc[k];
  std::vector<int> perm(N);
  std::iota(perm.begin(), perm.end(), 0);
  HomPoly total;
  do {
    int inv = 0;
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j) inv += perm[i] > perm[j];
    HomPoly term = HomPoly::constant(inv % 2 ? Rational(-1) : Rational(1));
    bool zero = false;
    for (int i = 0; i < N && !zero; ++i) {
      if (M[i][perm[i]].is_zero()) zero = true;
      else term = term * M[i][perm[i]];
    }
    if (!zero) total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::array<CBall, 3> exact_point(int a, int b, int c) {
  return {CBall::exact(a), CBall::exact(b), CBall::exact(c)};
}

// Roots of a w^2 + b w + c (a != 0) in big floats.
std::vector<BigComplex> quadratic_roots(const BigComplex& a, const BigComplex& b, const BigComplex& c) {
  BigComplex disc = sqrt(b * b - BigComplex(4) * a * c);
  BigComplex two_a = BigComplex(2) * a;
  return {(-b + disc) / two_a, (-b - disc) / two_a};
}

BigComplex eval_big(const HomPoly& p, const BigComplex& w, const BigComplex& t) {
  std::array<BigComplex, 3> z{w, t, BigComplex(1)};
  BigComplex acc(0);
  for (const auto& [e, c] : p.terms()) {
    BigComplex m{BigFloat(c)};
    for (int v = 0; v < 3; ++v)
      for (int k = 0; k < e[v]; ++k) m *= z[v];
    acc += m;
  }
  return acc;
}

}  // namespace

TEST_CASE("parse: expansion and Q1 of the worked example") {
  HomPoly p = parse_poly("z0^2 - z1*z2");
  CHECK(p.degree() == 2);
  CHECK(p.size() == 2);
  CHECK(p.coeff({2, 0, 0}) == 1);
  CHECK(p.coeff({0, 1, 1}) == -1);

  HomPoly q1 = parse_poly("z1^2 + z0*z1 + z0*z2 + (1/25)*z1*z2");
  CHECK(q1.coeff({0, 2, 0}) == 1);
  CHECK(q1.coeff({1, 1, 0}) == 1);
  CHECK(q1.coeff({1, 0, 1}) == 1);
  CHECK(q1.coeff({0, 1, 1}) == Rational(1, 25));
  CHECK(q1.size() == 4);
}

TEST_CASE("parse: errors") {
  try {
    parse_poly("z0^2 + z1");
    FAIL("expected NotHomogeneous");
  } catch (const NotHomogeneous& e) {
    CHECK(e.degrees == std::vector<int>{1, 2});
  }
  try {
    parse_poly("z0 + * z1");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.position == 5);
  }
  CHECK_THROWS_AS(parse_poly("z3"), SyntaxError);
  CHECK_THROWS_AS(parse_poly("(1/0)*z0"), SyntaxError);
  CHECK_THROWS_AS(parse_poly("z0^"), SyntaxError);
  CHECK_THROWS_AS(parse_poly("(z0 + z1"), SyntaxError);
}

TEST_CASE("parse: grammar corners") {
  CHECK(parse_poly(" ( z0 + z1 ) ^ 2 ") == parse_poly("z0^2 + 2*z0*z1 + z1^2"));
  CHECK(parse_poly("-3*z0") == parse_poly("0 - 3*z0"));
  CHECK(parse_poly("(-1/2)*z0*z1") == parse_poly("z0*z1*(-1/2)"));
  CHECK(parse_poly("(3)*z2") == parse_poly("3*z2"));
  CHECK(parse_poly("z0 - z0").is_zero());
  CHECK(parse_poly("z0 - z0").degree() == -1);
}

TEST_CASE("parse/print round trip on random forms") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    HomPoly p = random_form(rng, trial % 5);
    HomPoly back = parse_poly(p.to_string());
    CHECK(back.terms() == p.terms());
  }
  HomPoly neg = parse_poly("-1*z0^2 - (1/3)*z1^2");
  CHECK(neg.to_string() == "-1*z0^2 - (1/3)*z1^2");
  CHECK(parse_poly(neg.to_string()) == neg);
  CHECK_THROWS_AS(parse_poly("-z0^2"), SyntaxError);
}

TEST_CASE("resultant: worked cases") {
  HomPoly p = parse_poly("z0^2 - z1*z2");
  HomPoly q = parse_poly("z1^2 - z0*z2");
  HomPoly r = resultant(p, q, 0);
  CHECK(r == parse_poly("z1^4 - z1*z2^3"));
  CHECK(r == leibniz_resultant(p, q, 0));
  CHECK(r.degree() == 4);

  CHECK_THROWS_WITH_AS(resultant(z(0), z(1), 2), doctest::Contains("vanish"), Error);
  try {
    resultant(z(0), z(1), 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateLeadingForm);
  }
  CHECK(resultant(parse_poly("z0^2"), parse_poly("z0^2"), 0).is_zero());
  CHECK_THROWS_AS(resultant(HomPoly(), q, 0), Error);
}

TEST_CASE("resultant: Bareiss agrees with Leibniz, and antisymmetry") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    int dp = 1 + trial % 3, dq = 1 + (trial / 3) % 3;
    HomPoly p = random_form(rng, dp);
    HomPoly q = random_form(rng, dq);
    int v = trial % 3;
    HomPoly r = resultant(p, q, v);
    CHECK(r == leibniz_resultant(p, q, v));
    HomPoly s = resultant(q, p, v);
    CHECK((r == s || r == -s));
    if (!r.is_zero()) CHECK(r.degree() == dp * dq);
  }
}

TEST_CASE("resultant vanishing matches common roots (brute force at 1e-20)") {
  std::mt19937_64 rng(7);
  PrecisionScope ps(256);
  BigFloat tiny = BigFloat::pow2(-66);  // ~1e-20
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    HomPoly p = random_form(rng, 2);
    HomPoly q = random_form(rng, 2);
    if (p.coeff({2, 0, 0}) == 0 || q.coeff({2, 0, 0}) == 0) continue;
    HomPoly r = resultant(p, q, 0);
    std::vector<Rational> cs(r.degree() + 1, Rational(0));
    for (const auto& [e, c] : r.terms()) cs[e[1]] = c;
    UniPoly ru(cs);
    for (const auto& t : isolate_roots(ru)) {
      BigComplex a(BigFloat(p.coeff({2, 0, 0})));
      BigComplex b = eval_big(p.derivative(0), BigComplex(0), t.mid);
      BigComplex c = eval_big(p, BigComplex(0), t.mid);
      BigFloat best(1e30);
      for (const auto& w : quadratic_roots(a, b, c)) best = min(best, abs(eval_big(q, w, t.mid)));
      CHECK(best < tiny);
      ++checked;
    }
    // a point that is not a root of the resultant has no common root above it
    BigComplex t0(BigFloat(0.123), BigFloat(0.456));
    BigComplex a(BigFloat(p.coeff({2, 0, 0})));
    BigComplex b = eval_big(p.derivative(0), BigComplex(0), t0);
    BigComplex c = eval_big(p, BigComplex(0), t0);
    BigFloat best(1e30);
    for (const auto& w : quadratic_roots(a, b, c)) best = min(best, abs(eval_big(q, w, t0)));
    CHECK(best > tiny);
  }
  CHECK(checked > 50);
}

TEST_CASE("quadric_form: examples") {
  QuadricForm a = quadric_form(parse_poly("z0^2"));
  CHECK(a.rank == 1);
  CHECK(a.matrix[0][0] == 1);
  QuadricForm b = quadric_form(parse_poly("z0^2 - z1*z2"));
  CHECK(b.rank == 3);
  CHECK(b.matrix[1][2] == Rational(-1, 2));
  CHECK(b.det == Rational(-1, 4));
  CHECK(quadric_form(parse_poly("z1*z2")).rank == 2);
  CHECK_THROWS_AS(quadric_form(parse_poly("z1")), Error);
  CHECK(poly_from_matrix(b.matrix) == parse_poly("z0^2 - z1*z2"));
}

TEST_CASE("quadric_form: adjugate identity") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    Mat3 m = quadric_form(random_form(rng, 2)).matrix;
    Mat3 prod = adjugate(m) * m;
    CHECK(prod == det(m) * mat_identity());
  }
}

TEST_CASE("quadric_form: rank invariant under unimodular substitution") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> idx(0, 2);
  for (int trial = 0; trial < 60; ++trial) {
    HomPoly p;
    switch (trial % 3) {
      case 0: p = random_form(rng, 2); break;
      case 1: p = random_form(rng, 1) * random_form(rng, 1); break;
      default: p = random_form(rng, 1).pow(2); break;
    }
    // product of elementary shears
    std::array<HomPoly, 3> sub{z(0), z(1), z(2)};
    for (int k = 0; k < 6; ++k) {
      int i = idx(rng), j = idx(rng);
      if (i == j) continue;
      sub[i] = sub[i] + sub[j] * Rational(coef(rng));
    }
    CHECK(quadric_form(p).rank == quadric_form(p.compose(sub)).rank);
  }
}

TEST_CASE("quadric_form: rank one exactly for squares") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    HomPoly l = random_form(rng, 1);
    Rational s = testsupport::small_rational(rng);
    if (s == 0) s = 3;
    HomPoly p = l.pow(2) * s;
    REQUIRE(quadric_form(p).rank == 1);
    auto root = square_root(p);
    REQUIRE(root);
    CHECK(root->linear.pow(2) * root->radicand == p);
    HomPoly g = random_form(rng, 2);
    if (quadric_form(g).rank != 1) CHECK_FALSE(square_root(g));
    HomPoly split = random_form(rng, 1) * random_form(rng, 1);
    if (quadric_form(split).rank == 2) CHECK_FALSE(square_root(split));
  }
  auto r = square_root(parse_poly("225*z0^2 + 100*z1^2 + 4*z2^2 + 300*z0*z1 + 60*z0*z2 + 40*z1*z2"));
  REQUIRE(r);
  CHECK(r->radicand == 1);
  CHECK(r->linear == parse_poly("15*z0 + 10*z1 + 2*z2"));
  auto s = square_root(parse_poly("2*z2^2"));
  REQUIRE(s);
  CHECK(s->radicand == 2);
  CHECK(s->linear == z(2));
}

TEST_CASE("gaussian_extension_eval: exact points") {
  CBall v = gaussian_extension_eval(parse_poly("z0^2 - z1*z2"), exact_point(0, 0, 1));
  CHECK(v.mid.is_zero());
  CHECK(v.rad.is_zero());
  v = gaussian_extension_eval(parse_poly("z0^2 - z1*z2"), exact_point(1, 1, 1));
  CHECK(v.mid.is_zero());
  CHECK(v.rad.is_zero());
  HomPoly q2 = parse_poly("z2^2 + 50*z0*z1 - 10*z0*z2 + 9*z1*z2");
  v = gaussian_extension_eval(q2, exact_point(1, 0, 0));
  CHECK(v.mid.is_zero());
  CHECK(v.rad.is_zero());
}

TEST_CASE("gaussian_extension_eval: input radii propagate") {
  std::array<CBall, 3> pt{CBall(BigComplex(1), BigFloat(1e-10)), CBall::exact(2), CBall::exact(3)};
  CBall v = gaussian_extension_eval(parse_poly("z0^2 - z1*z2"), pt);
  // true values range over (1+e)^2 - 6
  CHECK(abs(v.mid.re - BigFloat(-5)) < BigFloat(1e-30));
  CHECK(v.rad >= BigFloat(2e-10));
  CHECK(v.rad < BigFloat(3e-10));
  CHECK_THROWS_AS(gaussian_extension_eval(parse_poly("z0^2"), pt, BigFloat(1e-12)), Error);
}

TEST_CASE("univariate: squarefree decomposition and isolation") {
  UniPoly x = UniPoly::x();
  UniPoly one = UniPoly::constant(1);
  UniPoly f = (x - one) * (x - one) * (x + one * Rational(2)) * (x + one * Rational(2)) * (x + one * Rational(2));
  auto sq = squarefree_decomposition(f);
  REQUIRE(sq.size() == 2);
  CHECK(sq[0].first == 2);
  CHECK(sq[0].second == x - one);
  CHECK(sq[1].first == 3);

  UniPoly g = (x * x + one) * (x - one * Rational(3)) * (x - one * Rational(1, 2));
  auto balls = isolate_roots(g);
  REQUIRE(balls.size() == 4);
  auto rr = rational_roots(g);
  REQUIRE(rr.size() == 2);
  CHECK(rr[0] == Rational(1, 2));
  CHECK(rr[1] == 3);
  int hits = 0;
  for (const auto& b : balls) {
    for (const CBall& target : {CBall::exact(0, 1), CBall::exact(0, -1), CBall::exact(3), CBall::exact(Rational(1, 2))})
      if ((b - target).contains_zero()) ++hits;
    CHECK(b.rad < BigFloat(1e-50));
  }
  CHECK(hits == 4);

  auto roots = roots_with_multiplicity(f);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].exact == Rational(-2));
  CHECK(roots[0].multiplicity == 3);
  CHECK(roots[1].multiplicity == 2);
}

TEST_CASE("rational reconstruction") {
  CHECK(simplest_between(Rational(49, 100), Rational(51, 100)) == Rational(1, 2));
  CHECK(simplest_between(Rational(-51, 100), Rational(-49, 100)) == Rational(-1, 2));
  CHECK(simplest_between(Rational(3), Rational(3)) == 3);
  CHECK(parse_rational("1.25") == Rational(5, 4));
  CHECK(parse_rational("-3e-2") == Rational(-3, 100));
  CHECK(parse_rational("7/21") == Rational(1, 3));
  CHECK(to_string(parse_rational("-2/4")) == "-1/2");
}
