#include <complex>
#include <random>

#include "doctest.h"
#include "pcurves/borel/borel.hpp"
#include "pcurves/poly/parse.hpp"
#include "pcurves/poly/quadric.hpp"
#include "support.hpp"

using namespace pcurves;
using testsupport::random_form;
using testsupport::small_rational;
using cd = std::complex<double>;

namespace {

HomPoly P(const std::string& s) { return parse_poly(s); }

Rational nonzero_rational(std::mt19937_64& rng) {
  Rational q = small_rational(rng);
  return q == 0 ? Rational(1) : q;
}

// Product over sign vectors of x0 +- x1 +- ... +- xj, in exact arithmetic.
Rational sign_product_oracle(const std::vector<Rational>& x) {
  const int j = static_cast<int>(x.size()) - 1;
  Rational prod = 1;
  for (int mask = 0; mask < (1 << j); ++mask) {
    Rational s = x[0];
    for (int i = 1; i <= j; ++i) s += (mask >> (i - 1)) & 1 ? -x[i] : x[i];
    prod *= s;
  }
  return prod;
}

cd sign_product_cd(const std::vector<cd>& y) {
  const int j = static_cast<int>(y.size()) - 1;
  cd prod = 1;
  for (int mask = 0; mask < (1 << j); ++mask) {
    cd s = std::sqrt(y[0]);
    for (int i = 1; i <= j; ++i) s += ((mask >> (i - 1)) & 1 ? -1.0 : 1.0) * std::sqrt(y[i]);
    prod *= s;
  }
  return prod;
}

cd eval_cd(const HomPoly& p, const std::array<cd, 3>& z) {
  cd acc = 0;
  for (const auto& [e, c] : p.terms()) acc += c.get_d() * std::pow(z[0], e[0]) * std::pow(z[1], e[1]) * std::pow(z[2], e[2]);
  return acc;
}

std::array<cd, 3> random_cd(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  return {cd(u(rng), u(rng)), cd(u(rng), u(rng)), cd(u(rng), u(rng))};
}

double mono_coeff(const MPoly& p, std::vector<int> m) { return p.coeff(m).get_d(); }

Rational rpow(const Rational& x, int n) {
  Rational r = 1;
  for (int i = 0; i < std::abs(n); ++i) r *= x;
  return n < 0 ? Rational(1) / r : r;
}

Rational qpow(const std::array<Rational, 3>& q, const std::array<int, 3>& e) { return rpow(q[0], e[0]) * rpow(q[1], e[1]) * rpow(q[2], e[2]); }

std::array<int, 3> random_exponents(std::mt19937_64& rng, int total) {
  std::uniform_int_distribution<int> d(0, total);
  int a = d(rng), b = std::uniform_int_distribution<int>(0, total - a)(rng);
  return {a, b, total - a - b};
}

// Largest 2x2 minor of sum a_j M_j, in doubles.
double rank_one_defect(const std::array<HomPoly, 3>& q, const std::vector<CBall>& a) {
  std::array<std::array<cd, 3>, 3> n{};
  for (int j = 0; j < 3; ++j) {
    Mat3 m = quadric_form(q[j]).matrix;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) n[r][c] += a[j].mid.to_complex() * m[r][c].get_d();
  }
  double worst = 0, scale = 0;
  for (const auto& row : n)
    for (const auto& x : row) scale = std::max(scale, std::abs(x));
  for (int r1 = 0; r1 < 3; ++r1)
    for (int r2 = r1 + 1; r2 < 3; ++r2)
      for (int c1 = 0; c1 < 3; ++c1)
        for (int c2 = c1 + 1; c2 < 3; ++c2) worst = std::max(worst, std::abs(n[r1][c1] * n[r2][c2] - n[r1][c2] * n[r2][c1]));
  return worst / (scale * scale);
}

}  // namespace

TEST_CASE("R_1 and R_2 closed forms") {
  auto y = [](int n, int i) { return MPoly::variable(n, i); };
  CHECK(generate_R(1).poly == y(2, 0) - y(2, 1));
  MPoly r2 = y(3, 0) * y(3, 0) + y(3, 1) * y(3, 1) + y(3, 2) * y(3, 2) - (y(3, 0) * y(3, 1) + y(3, 0) * y(3, 2) + y(3, 1) * y(3, 2)) * Rational(2);
  CHECK(generate_R(2).poly == r2);
  CHECK_THROWS_AS(generate_R(0), Error);
  CHECK_THROWS_AS(generate_R(5), Error);
}

TEST_CASE("R_j resubstitution against the sign product") {
  std::mt19937_64 rng(11);
  for (int j = 1; j <= 4; ++j) {
    MPoly r = generate_R(j).poly;
    CHECK(r.degree() == 1 << (j - 1));
    CHECK(r.is_homogeneous());
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Rational> x, sq;
      for (int i = 0; i <= j; ++i) {
        x.push_back(small_rational(rng));
        sq.push_back(x.back() * x.back());
      }
      CHECK(r.eval(sq) == sign_product_oracle(x));
    }
  }
}

TEST_CASE("R_j is symmetric in y_1..y_j") {
  std::mt19937_64 rng(12);
  for (int j = 2; j <= 4; ++j) {
    MPoly r = generate_R(j).poly;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> y;
      for (int i = 0; i <= j; ++i) y.push_back(small_rational(rng));
      std::vector<Rational> p = y;
      std::shuffle(p.begin() + 1, p.end(), rng);
      CHECK(r.eval(y) == r.eval(p));
    }
  }
}

TEST_CASE("S coefficient identities") {
  MPoly s111 = expand_S(1, 1, 1);
  MPoly expect(3);
  for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
    expect += MPoly::variable(3, i).pow(2) * MPoly::variable(3, j).pow(2) * Rational(16);
  }
  MPoly x = MPoly::variable(3, 0), y = MPoly::variable(3, 1), z = MPoly::variable(3, 2);
  expect -= (x * x * y * z + x * y * y * z + x * y * z * z) * Rational(32);
  CHECK(s111 == expect);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    Rational a = small_rational(rng), b = small_rational(rng), c = small_rational(rng);
    MPoly s = expand_S(a, b, c);
    CHECK(s.degree() <= 4);
    Rational am = a - 1, bm = b - 1;
    CHECK(s.coeff({4, 0, 0}) == am * am * am * am);
    CHECK(s.coeff({2, 2, 0}) == 2 * (3 * a * a * bm * bm - 2 * a * bm * (3 * b + 1) + 3 * b * b + 2 * b + 3));
    std::vector<Rational> pt{small_rational(rng), small_rational(rng), small_rational(rng)};
    Rational lhs = a * pt[0] + b * pt[1] + c * pt[2];
    cd want = sign_product_cd({cd(lhs.get_d()), cd(pt[0].get_d()), cd(pt[1].get_d()), cd(pt[2].get_d())});
    CHECK(std::abs(s.eval(pt).get_d() - want) <= 1e-9 * (1 + std::abs(want)));
  }
}

TEST_CASE("symbolic S specializes to the numeric S") {
  MPoly sym = expand_S_symbolic();
  CHECK(sym.is_homogeneous() == false);
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    Rational a = small_rational(rng), b = small_rational(rng), c = small_rational(rng);
    MPoly s = expand_S(a, b, c);
    for (int k = 0; k < 5; ++k) {
      std::vector<Rational> pt{small_rational(rng), small_rational(rng), small_rational(rng)};
      CHECK(sym.eval({pt[0], pt[1], pt[2], a, b, c}) == s.eval(pt));
    }
  }
  CHECK(mono_coeff(sym, {4, 0, 0, 4, 0, 0}) == doctest::Approx(1));
}

TEST_CASE("square combinations of the worked example") {
  auto q = b4_quadrics({1, 0, 0}, {Vec3{0, 1, 0}, Vec3{0, 0, 1}}, {Vec3{1, 1, Rational(1, 25)}, Vec3{50, -10, 9}});
  CHECK(q[1] == P("z1^2 + z0*z1 + z0*z2 + (1/25)*z1*z2"));
  auto sols = square_combination(q[0], q[1], q[2]);
  bool found = false;
  for (const auto& s : sols)
    if (s.exact && s.a == std::vector<Rational>{225, 100, 4}) {
      found = true;
      CHECK(s.root.radicand * s.root.linear.pow(2) == P("(15*z0 + 10*z1 + 2*z2)^2"));
      CHECK(s.nonzero_count == 3);
    }
  CHECK(found);
}

TEST_CASE("square combinations of diagonal nets") {
  auto sols = square_combination(P("z0^2"), P("z1^2"), P("z2^2"));
  REQUIRE(sols.size() == 3);
  for (const auto& s : sols) {
    CHECK(s.exact);
    CHECK(s.nonzero_count == 1);
  }
  auto sums = square_combination(P("z0^2 + z1^2"), P("z1^2 + z2^2"), P("z0^2 + z2^2"));
  REQUIRE(sums.size() == 3);
  std::vector<std::vector<Rational>> seen;
  for (const auto& s : sums) {
    CHECK(s.nonzero_count == 3);
    CHECK(s.root.radicand == 2);
    seen.push_back(s.a);
  }
  std::sort(seen.begin(), seen.end());
  CHECK(seen == std::vector<std::vector<Rational>>{{-1, 1, 1}, {1, -1, 1}, {1, 1, -1}});
}

TEST_CASE("square combination errors") {
  CHECK_THROWS_AS(square_combination(P("z0"), P("z1^2"), P("z2^2")), Error);
  try {
    square_combination(P("z0^2"), P("2*z0^2"), P("z1^2"));
    FAIL("expected InfinitelyManySolutions");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InfinitelyManySolutions);
  }
  std::mt19937_64 rng(15);
  int none = 0;
  for (int trial = 0; trial < 5; ++trial) {
    try {
      square_combination(random_form(rng, 2, 5), random_form(rng, 2, 5), random_form(rng, 2, 5));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NoSolution) ++none;
    }
  }
  CHECK(none == 5);
}

TEST_CASE("planted squares are recovered") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 15; ++trial) {
    HomPoly q1 = random_form(rng, 2, 5), q2 = random_form(rng, 2, 5), l = random_form(rng, 1, 5);
    Vec3 a{small_rational(rng), small_rational(rng), nonzero_rational(rng)};
    HomPoly q3 = (l * l - q1 * a[0] - q2 * a[1]) * (Rational(1) / a[2]);
    std::array<HomPoly, 3> q{q1, q2, q3};
    std::vector<SquareCombination> sols;
    try {
      sols = square_combination(q1, q2, q3);
    } catch (const Error& e) {
      FAIL(e.what());
    }
    bool hit = false;
    for (const auto& s : sols) {
      if (s.exact) {
        HomPoly sum = q1 * s.a[0] + q2 * s.a[1] + q3 * s.a[2];
        CHECK(sum == s.root.linear.pow(2) * s.root.radicand);
        CHECK(s.root.radicand > 0);
        if (s.a[0] * a[2] == s.a[2] * a[0] && s.a[1] * a[2] == s.a[2] * a[1]) hit = true;
      } else {
        CHECK(rank_one_defect(q, s.a_num) < 1e-9);
      }
    }
    CHECK(hit);
  }
}

TEST_CASE("b4 solves the worked example") {
  B4Result r = b4_solve({1, 0, 0}, {Vec3{0, 1, 0}, Vec3{0, 0, 1}}, {Vec3{1, 1, Rational(1, 25)}, Vec3{50, -10, 9}});
  CHECK(r.detA == 1);
  bool found = false;
  for (const auto& s : r.solutions)
    if (same(s.point, make_point(Vec3{15, 10, 2})) == Zero3::zero) {
      found = true;
      CHECK(!s.zero_coordinate);
      CHECK(s.square == Tri::yes);
      REQUIRE(s.combination);
      CHECK(s.combination->a == std::vector<Rational>{225, 100, 4});
    }
  CHECK(found);
}

TEST_CASE("b4 with B = 0 gives coordinate points") {
  B4Result z = b4_solve({1, 0, 0}, {Vec3{0, 1, 0}, Vec3{0, 0, 1}}, {Vec3{0, 0, 0}, Vec3{0, 0, 0}});
  CHECK(z.solutions.size() == 3);
  for (const auto& s : z.solutions) CHECK(s.zero_coordinate);
}

TEST_CASE("b4 errors") {
  CHECK_THROWS_AS(b4_solve({1, 0, 0}, {Vec3{1, 0, 0}, Vec3{0, 0, 1}}, {Vec3{1, 2, 3}, Vec3{4, 5, 6}}), Error);
  try {
    b4_solve({0, 1, 0}, {Vec3{0, 2, 0}, Vec3{0, 0, 1}}, {Vec3{1, 2, 3}, Vec3{4, 5, 6}});
    FAIL("expected SingularA");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularA);
  }
}

TEST_CASE("b4 solutions are square combinations") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 12; ++trial) {
    Vec3 c{nonzero_rational(rng), small_rational(rng), small_rational(rng)};
    std::array<Vec3, 2> a{Vec3{small_rational(rng), small_rational(rng), small_rational(rng)},
                          Vec3{small_rational(rng), small_rational(rng), small_rational(rng)}};
    std::array<Vec3, 2> b{Vec3{small_rational(rng), small_rational(rng), small_rational(rng)},
                          Vec3{small_rational(rng), small_rational(rng), small_rational(rng)}};
    B4Result r;
    try {
      r = b4_solve(c, a, b);
    } catch (const Error& e) {
      continue;
    }
    for (const auto& s : r.solutions) {
      CHECK(s.square != Tri::no);
      if (s.combination) {
        ++checked;
        std::vector<CBall> w = s.combination->a_num;
        CHECK(rank_one_defect(r.quadrics, w) < 1e-9);
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("degeneracy curve R3 against the sign product") {
  std::mt19937_64 rng(18);
  std::array<HomPoly, 3> q{random_form(rng, 2, 4), random_form(rng, 2, 4), random_form(rng, 2, 4)};
  std::array<Rational, 4> al{1, 2, Rational(1, 2), -3};
  std::array<Rational, 3> a{1, -1, 2};
  DegeneracyCurve d = degeneracy_curve(al, a, q);
  CHECK(d.kind == DegeneracyKind::r3);
  CHECK(d.q_degree == 4);
  CHECK(d.z_degree == 8);
  CHECK(!d.identically_zero);
  for (int trial = 0; trial < 10; ++trial) {
    auto pt = random_cd(rng);
    std::array<cd, 3> qv{eval_cd(q[0], pt), eval_cd(q[1], pt), eval_cd(q[2], pt)};
    cd l = a[0].get_d() * qv[0] + a[1].get_d() * qv[1] + a[2].get_d() * qv[2];
    std::vector<cd> y{al[0].get_d() * al[0].get_d() * l};
    for (int j = 0; j < 3; ++j) y.push_back(al[j + 1].get_d() * al[j + 1].get_d() * qv[j]);
    cd want = sign_product_cd(y), got = eval_cd(d.poly, pt);
    CHECK(std::abs(got - want) <= 1e-8 * (1 + std::abs(want)));
  }
}

TEST_CASE("degeneracy curve with vanishing alphas") {
  std::mt19937_64 rng(19);
  std::array<HomPoly, 3> q{random_form(rng, 2, 4), random_form(rng, 2, 4), random_form(rng, 2, 4)};
  std::array<Rational, 3> a{1, 1, 0};
  DegeneracyCurve r2 = degeneracy_curve({0, 1, 2, 3}, a, q);
  CHECK(r2.kind == DegeneracyKind::r2);
  CHECK(r2.z_degree == 4);
  for (int trial = 0; trial < 10; ++trial) {
    auto pt = random_cd(rng);
    std::vector<cd> y{eval_cd(q[0], pt), 4.0 * eval_cd(q[1], pt), 9.0 * eval_cd(q[2], pt)};
    cd want = sign_product_cd(y), got = eval_cd(r2.poly, pt);
    CHECK(std::abs(got - want) <= 1e-8 * (1 + std::abs(want)));
  }
  DegeneracyCurve col = degeneracy_curve({0, 0, 1, 1}, a, q);
  CHECK(col.kind == DegeneracyKind::collapse);
  CHECK(col.poly == q[1] - q[2]);
  DegeneracyCurve lone = degeneracy_curve({0, 0, 0, 2}, a, q);
  CHECK(lone.poly == q[2] * Rational(4));

  try {
    degeneracy_curve({0, 0, 0, 0}, a, q);
    FAIL("expected AllAlphaZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AllAlphaZero);
  }
  CHECK_THROWS_AS(degeneracy_curve({1, 1, 1, 1}, {1, 0, 0}, q), Error);
}

TEST_CASE("degeneracy curve vanishes identically on a linear square-root relation") {
  HomPoly l1 = P("z0 + z1"), l2 = P("z1 - 2*z2");
  DegeneracyCurve e = degeneracy_curve({0, 1, 1, 1}, {1, 1, 1}, {l1 * l1, l2 * l2, (l1 + l2) * (l1 + l2)});
  CHECK(e.identically_zero);
}

TEST_CASE("monomial reduction cases") {
  ReductionConclusion c1 = monomial_equivalence_reduce({{{2, 2, 0}, {0, 2, 2}, Rational(3)}});
  CHECK(c1.kind == ReductionCase::case1);
  CHECK(c1.u == 0);
  CHECK(c1.v == 2);
  CHECK(c1.r == 2);
  CHECK(c1.gamma == 3);

  ReductionConclusion c2 = monomial_equivalence_reduce({{{4, 0, 0}, {1, 2, 1}, Rational(2)}, {{0, 4, 0}, {1, 1, 2}, Rational(5)}});
  CHECK(c2.kind == ReductionCase::case2);
  CHECK(c2.r == 7);
  CHECK(c2.sources == std::vector<int>{0, 1});

  ReductionConclusion in = monomial_equivalence_reduce({{{3, 0, 1}, {1, 1, 2}, Rational(2)}, {{4, 0, 0}, {0, 2, 2}, Rational(4)}});
  CHECK(in.kind == ReductionCase::inconclusive);

  CHECK(!rational_multiple({4, -4, 0}, {2, 0, -2}));
  CHECK(rational_multiple({2, -2, 0}, {4, -4, 0}));
  CHECK(rational_multiple({2, -1, -1}, {-4, 2, 2}));

  for (MonomialRelation bad : {MonomialRelation{{-1, 2, 0}, {1, 0, 0}, 1}, MonomialRelation{{2, 0, 0}, {0, 1, 0}, 1},
                               MonomialRelation{{1, 1, 0}, {0, 1, 1}, 0}}) {
    try {
      monomial_equivalence_reduce({bad});
      FAIL("expected MalformedRelation");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MalformedRelation);
    }
  }
}

TEST_CASE("monomial reduction conclusions hold on random values") {
  std::mt19937_64 rng(20);
  int conclusive = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::array<Rational, 3> q{nonzero_rational(rng), nonzero_rational(rng), nonzero_rational(rng)};
    int n = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<MonomialRelation> rel;
    for (int i = 0; i < n; ++i) {
      int total = std::uniform_int_distribution<int>(1, 4)(rng);
      MonomialRelation m{random_exponents(rng, total), random_exponents(rng, total), 1};
      m.alpha = qpow(q, m.k) / qpow(q, m.l);
      rel.push_back(m);
    }
    ReductionConclusion c = monomial_equivalence_reduce(rel);
    if (c.kind == ReductionCase::inconclusive) continue;
    ++conclusive;
    CHECK(c.r > 0);
    CHECK(c.u != c.v);
    CHECK(rpow(q[c.u], c.r) == c.gamma * rpow(q[c.v], c.r));
  }
  CHECK(conclusive > 50);
}

TEST_CASE("fermat check") {
  FermatReport v = fermat_check(P("z0^2 + z1^2 + z2^2"), P("z0^2 + 2*z1^2 + 3*z2^2"), P("z0^2 + 4*z1^2 + 9*z2^2"));
  CHECK(v.find("independent")->verdict == Verdict::pass);
  CHECK(v.find("smooth")->verdict == Verdict::pass);
  CHECK(v.find("prop.1")->verdict == Verdict::pass);
  CHECK(v.find("prop.2")->verdict == Verdict::pass);
  CHECK(v.find("prop.3")->verdict == Verdict::pass);
  CHECK(v.squares.size() == 3);

  FermatReport dep = fermat_check(P("z0^2 + z1^2 + z2^2"), P("z0^2 + 2*z1^2 + 3*z2^2"), P("2*z0^2 + 3*z1^2 + 4*z2^2"));
  CHECK(dep.find("independent")->verdict == Verdict::fail);
  FermatReport sing = fermat_check(P("z0^2 + z1^2"), P("z0^2 + 2*z1^2 + 3*z2^2"), P("z0^2 + 4*z1^2 + 9*z2^2"));
  CHECK(sing.find("smooth")->verdict == Verdict::fail);

  try {
    fermat_check(P("z0*z1"), P("z1^2"), P("z2^2"));
    FAIL("expected NotDiagonal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDiagonal);
  }
}

TEST_CASE("worked example verification") {
  ExampleReport r = example_verify();
  CHECK(r.square_exact);
  CHECK(r.square_found);
  CHECK(r.b4_found);
  REQUIRE(r.items.size() == 5);
  for (const auto& it : r.items) CHECK_MESSAGE(it.verdict == Verdict::pass, it.key << " " << it.detail);
  CHECK(r.all_pass());
}
