#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "pcurves/error.hpp"
#include "pcurves/nevanlinna/nevanlinna.hpp"
#include "pcurves/poly/parse.hpp"

using namespace pcurves;

namespace {

constexpr double kPi = std::numbers::pi;

HomPoly P(const std::string& s) { return parse_poly(s); }

XiPoly xi_poly(std::vector<cplx> c) { return XiPoly(std::move(c)); }

ExpCurve exp_line() { return ExpCurve::from_exponents({xi_poly({}), xi_poly({0, 1})}, 1); }
ExpCurve exp_square() { return ExpCurve::from_exponents({xi_poly({}), xi_poly({0, 0, 1})}, 2); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

// Periodic trapezoid rule, independent of the adaptive quadrature.
double trapezoid_cartan(const ExpCurve& f, double r, int nodes = 200000) {
  double acc = 0;
  for (int k = 0; k < nodes; ++k) acc += f.log_max(std::polar(r, 2 * kPi * k / nodes));
  return acc / nodes - f.log_max(0.0);
}

std::vector<double> logspace(double a, double b, int n) {
  std::vector<double> r;
  for (int k = 0; k < n; ++k) r.push_back(std::pow(10.0, a + (b - a) * k / (n - 1)));
  return r;
}

cplx random_c(std::mt19937_64& rng, double span = 1) {
  std::uniform_real_distribution<double> u(-span, span);
  return {u(rng), u(rng)};
}

// N(r) from an explicit zero list.
double n_closed(const std::vector<cplx>& zs, double r) {
  double acc = 0;
  int at_r0 = 0;
  for (cplx z : zs) {
    double m = std::abs(z);
    if (m <= kR0) ++at_r0;
    else if (m <= r) acc += std::log(r / m);
  }
  return acc + at_r0 * std::log(r / kR0);
}

// Zeros of sum_k c_k e^{k xi} (k = 0..2) in |xi| <= r via w = e^xi.
std::vector<cplx> lattice_zeros(cplx c0, cplx c1, cplx c2, double r) {
  std::vector<cplx> ws;
  if (c2 == cplx(0)) {
    ws.push_back(-c0 / c1);
  } else {
    cplx disc = std::sqrt(c1 * c1 - 4.0 * c2 * c0);
    ws.push_back((-c1 + disc) / (2.0 * c2));
    ws.push_back((-c1 - disc) / (2.0 * c2));
  }
  std::vector<cplx> out;
  for (cplx w : ws) {
    cplx base = std::log(w);
    int kmax = static_cast<int>(r / (2 * kPi)) + 2;
    for (int k = -kmax; k <= kmax; ++k) {
      cplx z = base + cplx(0, 2 * kPi * k);
      if (std::abs(z) <= r) out.push_back(z);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("complex parsing") {
  CHECK(parse_complex("3") == cplx(3, 0));
  CHECK(parse_complex("-2.5i") == cplx(0, -2.5));
  CHECK(parse_complex("1+2i") == cplx(1, 2));
  CHECK(parse_complex("1e-3-2i") == cplx(1e-3, -2));
  CHECK(parse_complex("i") == cplx(0, 1));
  CHECK(parse_complex("-i") == cplx(0, -1));
  CHECK(parse_complex(" 0.5 + 0.25i ") == cplx(0.5, 0.25));
  CHECK_THROWS_AS(parse_complex("abc"), SyntaxError);
  CHECK_THROWS_AS(parse_complex(""), SyntaxError);
  CHECK(parse_complex(format_complex(cplx(0.1, -1.0 / 3))) == cplx(0.1, -1.0 / 3));
}

TEST_CASE("exponential sums normalize") {
  ExpCurve f = ExpCurve::from_exponents({xi_poly({}), xi_poly({0, 1}), xi_poly({0, 2})}, 1);
  CHECK(compose(P("z1^2 - z0*z2"), f).is_zero());
  ExpSum g = compose(P("z1 - z0"), exp_line());
  CHECK(g.terms().size() == 2);
  ExpSum shifted = ExpSum::exp_of(xi_poly({std::log(2.0), 1}));
  REQUIRE(shifted.terms().size() == 1);
  CHECK(std::abs(shifted.terms()[0].coeff - 2.0) < 1e-15);
  CHECK_THROWS_AS(ExpCurve::from_exponents({xi_poly({}), xi_poly({0, 0, 1})}, 1), Error);
  CHECK_THROWS_AS(compose(P("z2"), exp_line()), Error);
}

TEST_CASE("characteristic closed forms") {
  for (double r : {10.0, 50.0, 200.0}) CHECK(std::abs(characteristic(exp_line(), r).value - r / kPi) < 1e-6);
  CHECK(std::abs(characteristic(exp_square(), 20).value - 400 / kPi) < 1e-4);
  ExpCurve constant = ExpCurve::from_exponents({xi_poly({}), xi_poly({})}, 1);
  CHECK(constant.is_constant());
  CHECK(std::abs(characteristic(constant, 30).value) < 1e-12);
  CHECK(code_of([] { characteristic(exp_line(), 0.5); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("characteristic agrees with a trapezoid oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 6; ++trial) {
    int lambda = 1 + trial % 2;
    std::vector<XiPoly> e;
    for (int j = 0; j < 3; ++j) {
      std::vector<cplx> c;
      for (int k = 0; k <= lambda; ++k) c.push_back(random_c(rng));
      e.push_back(xi_poly(c));
    }
    ExpCurve f = ExpCurve::from_exponents(e, lambda);
    for (double r : {3.0, 12.0}) {
      CharValue v = characteristic(f, r);
      CHECK(std::abs(v.value - trapezoid_cartan(f, r)) < 1e-5 * (1 + v.value));
      CHECK(v.error < 1e-6);
    }
  }
}

TEST_CASE("Euclidean and Cartan forms differ by a bounded amount") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 4; ++trial) {
    ExpCurve f = ExpCurve::from_exponents({xi_poly({random_c(rng), random_c(rng)}), xi_poly({random_c(rng), random_c(rng)}),
                                           xi_poly({random_c(rng), random_c(rng)})},
                                          1);
    std::vector<double> d;
    for (double r : {1.0, 5.0, 20.0, 80.0}) d.push_back(characteristic(f, r, Norm::euclidean).value - characteristic(f, r).value);
    auto [lo, hi] = std::minmax_element(d.begin(), d.end());
    CHECK(*hi - *lo <= 0.5 * std::log(3.0) + 1e-6);
  }
  CHECK(std::abs(characteristic(exp_line(), 1, Norm::euclidean).value) < 1e-12);
}

TEST_CASE("characteristic is monotone and invariant under a common factor") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<XiPoly> e{xi_poly({random_c(rng), random_c(rng), random_c(rng)}), xi_poly({random_c(rng), random_c(rng), random_c(rng)})};
    ExpCurve f = ExpCurve::from_exponents(e, 2);
    GrowthSample s = sample_growth(f, {1, 2, 4, 8, 16, 32});
    CHECK(s.monotone());
    XiPoly q = xi_poly({random_c(rng), random_c(rng), random_c(rng)});
    ExpCurve g = ExpCurve::from_exponents({e[0] + q, e[1] + q}, 2);
    for (double r : {3.0, 17.0}) CHECK(std::abs(characteristic(f, r).value - characteristic(g, r).value) < 1e-8 * (1 + r * r));
  }
}

TEST_CASE("scalar characteristic against the projective one") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 3; ++trial) {
    XiPoly p = xi_poly({random_c(rng), random_c(rng), random_c(rng)});
    ExpCurve f = ExpCurve::from_exponents({xi_poly({}), p}, 2);
    std::vector<double> d;
    for (double r : {2.0, 8.0, 32.0}) d.push_back(scalar_characteristic(ExpSum::exp_of(p), r).value - characteristic(f, r).value);
    auto [lo, hi] = std::minmax_element(d.begin(), d.end());
    CHECK(*hi - *lo < 1e-6);
  }
}

TEST_CASE("Ahlfors limits") {
  CHECK(ahlfors_limit({0, 1}, 1) == doctest::Approx(1 / kPi));
  CHECK(ahlfors_limit({cplx(2, 1), cplx(2, 1), cplx(2, 1)}, 1) == 0);
  CHECK(ahlfors_limit({0, 1, 2}, 2) == doctest::Approx(2 / kPi));
  CHECK(ahlfors_limit({0, cplx(0, 1), cplx(1, 1)}, 2) == doctest::Approx((2 + std::sqrt(2.0)) / (2 * kPi)));
  CHECK(code_of([] { ahlfors_limit({0, 1}, 0); }) == ErrorCode::InvalidArgument);

  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 6; ++trial) {
    int lambda = 1 + trial % 2;
    std::vector<XiPoly> e;
    std::vector<cplx> lead;
    for (int j = 0; j < 2 + trial % 3; ++j) {
      std::vector<cplx> c(lambda + 1, 0.0);
      c[lambda] = random_c(rng);
      lead.push_back(c[lambda]);
      e.push_back(xi_poly(c));
    }
    double r = lambda == 1 ? 200 : 30;
    double t = characteristic(ExpCurve::from_exponents(e, lambda), r).value / std::pow(r, lambda);
    CHECK(std::abs(t - ahlfors_limit(lead, lambda)) <= 0.01 * ahlfors_limit(lead, lambda));
  }
}

TEST_CASE("order estimate") {
  auto radii = logspace(0.5, 2.7, 12);
  OrderEstimate one = order_estimate(sample_growth(exp_line(), radii));
  CHECK(std::abs(one.value - 1.0) < 0.05);
  OrderEstimate two = order_estimate(sample_growth(exp_square(), logspace(0, 2, 10)));
  CHECK(std::abs(two.value - 2.0) < 0.05);
  ExpCurve constant = ExpCurve::from_exponents({xi_poly({}), xi_poly({cplx(1, 1)})}, 1);
  OrderEstimate zero = order_estimate(sample_growth(constant, radii));
  CHECK(zero.degenerate);
  CHECK(zero.value == 0);
  CHECK(code_of([&] { order_estimate(sample_growth(exp_line(), logspace(0, 1, 10))); }) == ErrorCode::InsufficientSpan);
  CHECK(code_of([&] { order_estimate(sample_growth(exp_line(), logspace(0, 3, 5))); }) == ErrorCode::InsufficientSpan);
}

TEST_CASE("counting zeros of e^xi - 1") {
  CountingSample c = counting(exp_line(), P("z1 - z0"), 100);
  CHECK(c.n(100) == 31);
  for (double t : {1.0, 6.0, 7.0, 30.0, 63.0, 99.0}) CHECK(c.n(t) == 1 + 2 * static_cast<int>(std::floor(t / (2 * kPi))));
  std::vector<cplx> lattice;
  for (int k = -15; k <= 15; ++k) lattice.push_back(cplx(0, 2 * kPi * k));
  for (double r : {1.0, 10.0, 55.5, 100.0}) CHECK(std::abs(c.N(r) - n_closed(lattice, r)) < 1e-6);
  for (const auto& z : c.zeros) {
    CHECK(z.multiplicity == 1);
    CHECK(std::abs(z.z.real()) < 1e-9);
    double k = z.z.imag() / (2 * kPi);
    CHECK(std::abs(k - std::round(k)) < 1e-9);
  }
  CountingSample none = counting(exp_line(), P("z0"), 100);
  CHECK(none.zeros.empty());
  CHECK(none.N(50) == 0);
  ExpCurve conic = ExpCurve::from_exponents({xi_poly({}), xi_poly({0, 1}), xi_poly({0, 2})}, 1);
  CHECK(code_of([&] { counting(conic, P("z1^2 - z0*z2"), 10); }) == ErrorCode::DivisorContainsCurve);
}

TEST_CASE("counting against lattice oracles") {
  std::mt19937_64 rng(36);
  ExpCurve f = ExpCurve::from_exponents({xi_poly({}), xi_poly({0, 1}), xi_poly({0, 2})}, 1);
  for (int trial = 0; trial < 8; ++trial) {
    cplx c0 = random_c(rng, 3), c1 = random_c(rng, 3), c2 = trial % 2 ? random_c(rng, 3) : cplx(0);
    ExpSum g = ExpSum::constant(c0) + c1 * ExpSum::exp_of(xi_poly({0, 1})) + c2 * ExpSum::exp_of(xi_poly({0, 2}));
    double r = 40;
    auto oracle = lattice_zeros(c0, c1, c2, r);
    auto found = zeros_in_disk(g, r);
    int total = 0;
    for (const auto& z : found) total += z.multiplicity;
    CHECK(total == static_cast<int>(oracle.size()));
    for (const auto& z : found) {
      double best = 1e9;
      for (cplx o : oracle) best = std::min(best, std::abs(o - z.z));
      CHECK(best < 1e-8);
    }
  }
  (void)f;
}

TEST_CASE("winding numbers are integers around known zeros") {
  ExpSum g = compose(P("z1 - z0"), exp_line());
  CHECK(winding_number(g, -1, 1, -1, 1) == 1);
  CHECK(winding_number(g, -1, 1, 1, 13) == 2);
  CHECK(winding_number(g, 1, 3, -20, 20) == 0);
  CHECK(code_of([&] { winding_number(g, 0, 1, -1, 1); }) == ErrorCode::ZeroOnContour);
}

TEST_CASE("first and second main theorem numerics") {
  auto radii = logspace(1, 3, 15);
  MainTheoremReport fmt = main_theorem_check(exp_line(), {P("z1 - z0")}, MainKind::first, radii);
  CHECK(fmt.pass);
  CHECK(fmt.variation < 0.5);
  MainTheoremReport smt = main_theorem_check(exp_line(), {P("z0"), P("z1"), P("z0 - z1")}, MainKind::second, radii);
  CHECK(smt.pass);
  CHECK(smt.abs_c < 3);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    CHECK(smt.N[i][0] == 0);
    CHECK(smt.N[i][1] == 0);
  }
  ExpCurve deg = ExpCurve{{ExpSum::constant(1), ExpSum::exp_of(xi_poly({0, 1})), ExpSum::constant(1) + ExpSum::exp_of(xi_poly({0, 1}))}, 1};
  CHECK(!linearly_nondegenerate(deg));
  CHECK(code_of([&] { main_theorem_check(deg, {P("z0"), P("z1"), P("z2"), P("z0+z1+z2")}, MainKind::second, radii); }) ==
        ErrorCode::DegenerateCurve);
  ExpCurve veronese = ExpCurve::from_exponents({xi_poly({}), xi_poly({0, 1}), xi_poly({0, 2})}, 1);
  CHECK(linearly_nondegenerate(veronese));
  CHECK(code_of([&] { main_theorem_check(veronese, {P("z0"), P("z1"), P("z0+z1")}, MainKind::second, radii); }) ==
        ErrorCode::NotGeneralPosition);
  CHECK(code_of([&] { main_theorem_check(exp_line(), {P("z0"), P("2*z0")}, MainKind::second, radii); }) == ErrorCode::NotGeneralPosition);
}

TEST_CASE("FMT holds for random divisors") {
  std::mt19937_64 rng(37);
  std::vector<double> radii{10, 20, 40, 80};
  for (int trial = 0; trial < 4; ++trial) {
    std::uniform_int_distribution<int> d(-4, 4);
    HomPoly div = HomPoly::from_terms({{{1, 0, 0}, Rational(d(rng) == 0 ? 1 : d(rng))}, {{0, 1, 0}, Rational(1 + trial)}});
    MainTheoremReport rep = main_theorem_check(exp_line(), {div}, MainKind::first, radii);
    for (double s : rep.slack) CHECK(s > -3);
  }
}

TEST_CASE("functoriality") {
  auto radii = logspace(1, 2, 8);
  FunctorialityReport rep = functoriality_check(exp_line(), {P("z0^2"), P("z1^2"), P("z0*z1")}, radii);
  CHECK(rep.p == 2);
  CHECK(rep.pass);
  CHECK(rep.variation < 0.1);
  ExpCurve plane = ExpCurve::from_exponents({xi_poly({}), xi_poly({0, 1}), xi_poly({0, cplx(0.3, 0.8)})}, 1);
  CHECK(functoriality_check(plane, {P("z0^2"), P("z1^2"), P("z2^2")}, radii).pass);
  CHECK(code_of([&] { functoriality_check(plane, {P("z0^2 - z1*z2"), P("z1^2 - z0*z2"), P("z0^2 - z1*z2 + z1^2 - z0*z2")}, radii); }) ==
        ErrorCode::NotAMorphism);
  CHECK(code_of([&] { functoriality_check(plane, {P("z0^2"), P("z1")}, radii); }) == ErrorCode::DegreeMismatch);
  CHECK(code_of([&] { functoriality_check(exp_line(), {P("z0^2"), P("z0*z1")}, radii); }) == ErrorCode::NotAMorphism);
}

TEST_CASE("defect estimates") {
  std::vector<double> radii{50, 100, 200, 300, 400, 500};
  DefectEstimate missed = defect_estimate(exp_line(), P("z0"), radii);
  CHECK(missed.no_zeros);
  CHECK(missed.value == 1);
  DefectEstimate hit = defect_estimate(exp_line(), P("z1 - z0"), radii);
  CHECK(std::abs(hit.value) < 0.05);
  DefectEstimate cubic = defect_estimate(exp_line(), P("z0*z1*(z1 - z0)"), radii);
  CHECK(std::abs(cubic.value - 2.0 / 3) < 0.05);
  for (double v : hit.ratios) CHECK(v > -0.05);
}

TEST_CASE("three quadrics certificate") {
  ThreeQuadricsReport a = three_quadrics_certificate({0, 1, 2});
  CHECK(a.X == doctest::Approx(2 / kPi));
  CHECK(a.lhs == doctest::Approx(18 / kPi));
  CHECK(a.rhs == doctest::Approx(16 / kPi));
  CHECK(a.contradiction);
  REQUIRE(a.checks.size() == 4);
  for (const auto& c : a.checks) CHECK(c.pass);
  ThreeQuadricsReport eq = three_quadrics_certificate({cplx(1, 1), cplx(1, 1), cplx(1, 1)});
  CHECK(eq.X == 0);
  CHECK(!eq.contradiction);
  ThreeQuadricsReport tri = three_quadrics_certificate({0, cplx(0, 1), cplx(1, 1)});
  CHECK(tri.X == doctest::Approx((2 + std::sqrt(2.0)) / (2 * kPi)));
  for (const auto& c : tri.checks) CHECK(c.rel_error < 0.01);
  ThreeQuadricsData data{{cplx(1, 0), cplx(0, -1), cplx(0.5, 0.5)}, {0, cplx(0.2, 0), cplx(-0.1, 0.3)}};
  ThreeQuadricsReport full = three_quadrics_certificate({0, 1, 2}, data, true, 60);
  for (const auto& c : full.checks) CHECK(c.rel_error < 0.01);
}
