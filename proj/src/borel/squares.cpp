#include "pcurves/borel/borel.hpp"

namespace pcurves {

namespace {

using BallMat = std::array<std::array<CBall, 3>, 3>;

std::vector<Rational> primitive(std::vector<Rational> v) {
  mpz_class l = 1, g = 0;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& x : v) {
    ints.push_back(Rational(x * l).get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (g == 0) return v;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(mpz_class(ints[i] / g));
  return v;
}

std::optional<SquareCombination> exact_combination(const std::vector<HomPoly>& q, const std::vector<Rational>& coeffs) {
  std::vector<Rational> a = primitive(coeffs);
  HomPoly sum;
  for (std::size_t j = 0; j < q.size(); ++j) sum += q[j] * a[j];
  auto root = square_root(sum);
  if (!root) return std::nullopt;
  if (root->radicand < 0) {
    for (auto& x : a) x = -x;
    root->radicand = -root->radicand;
  }
  SquareCombination sc;
  sc.a = a;
  sc.root = *root;
  for (const auto& x : a) {
    sc.a_num.push_back(to_ball(x));
    sc.nonzero_count += x != 0;
  }
  sc.radicand_num = to_ball(root->radicand);
  auto lc = linear_coeffs(root->linear);
  sc.linear_num = {to_ball(lc[0]), to_ball(lc[1]), to_ball(lc[2])};
  return sc;
}

BallMat combine(const std::vector<Mat3>& m, const std::vector<CBall>& a) {
  BallMat out;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      CBall s = CBall::exact(0);
      for (std::size_t j = 0; j < m.size(); ++j) s = s + a[j] * to_ball(m[j][i][k]);
      out[i][k] = s;
    }
  return out;
}

SquareCombination numeric_combination(const std::vector<Mat3>& m, const std::vector<CBall>& a) {
  BallMat n = combine(m, a);
  int piv = 0;
  for (int i = 1; i < 3; ++i)
    if (abs(n[i][i].mid) > abs(n[piv][piv].mid)) piv = i;
  SquareCombination sc;
  sc.exact = false;
  sc.a_num = a;
  for (const auto& x : a) sc.nonzero_count += decide_zero(x) != Zero3::zero;
  sc.radicand_num = CBall::exact(1) / n[piv][piv];
  sc.linear_num = {n[piv][0], n[piv][1], n[piv][2]};
  return sc;
}

Tri rank_one(const BallMat& n) {
  bool unknown = false, nonzero_entry = false;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      Zero3 z = decide_zero(n[i][k]);
      if (z != Zero3::zero) nonzero_entry = true;
    }
  for (int r1 = 0; r1 < 3; ++r1)
    for (int r2 = r1 + 1; r2 < 3; ++r2)
      for (int c1 = 0; c1 < 3; ++c1)
        for (int c2 = c1 + 1; c2 < 3; ++c2) {
          Zero3 z = decide_zero(n[r1][c1] * n[r2][c2] - n[r1][c2] * n[r2][c1]);
          if (z == Zero3::nonzero) return Tri::no;
          if (z == Zero3::unknown) unknown = true;
        }
  if (!nonzero_entry) return Tri::no;
  return unknown ? Tri::unknown : Tri::yes;
}

std::vector<CBall> point_balls(const ProjVec& p) { return {p.ball[0], p.ball[1], p.ball[2]}; }

}  // namespace

std::vector<SquareCombination> square_combination(const HomPoly& q1, const HomPoly& q2, const HomPoly& q3) {
  const std::vector<HomPoly> q{q1, q2, q3};
  std::vector<Mat3> m;
  for (const auto& p : q) {
    if (p.degree() != 2) throw Error(ErrorCode::WrongDegree, "square_combination needs quadrics");
    m.push_back(quadric_form(p).matrix);
  }
  std::array<std::array<HomPoly, 3>, 3> net;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 3; ++j) net[i][k] += z(j) * m[j][i][k];
  std::vector<HomPoly> minors;
  for (int r1 = 0; r1 < 3; ++r1)
    for (int r2 = r1 + 1; r2 < 3; ++r2)
      for (int c1 = 0; c1 < 3; ++c1)
        for (int c2 = c1 + 1; c2 < 3; ++c2) {
          HomPoly d = net[r1][c1] * net[r2][c2] - net[r1][c2] * net[r2][c1];
          if (!d.is_zero() && std::find(minors.begin(), minors.end(), d) == minors.end()) minors.push_back(d);
        }
  if (minors.empty()) throw Error(ErrorCode::InfinitelyManySolutions, "every member of the net has rank at most one");

  std::vector<SquareCombination> out;
  for (const ProjVec& pt : common_zeros(minors)) {
    bool zero_member = true;
    for (const auto& row : net)
      for (const auto& e : row)
        if (!e.is_zero() && vanishes_at(e, pt) != Zero3::zero) zero_member = false;
    if (zero_member) continue;
    if (pt.is_rational()) {
      Vec3 a = pt.rational();
      if (auto sc = exact_combination(q, {a[0], a[1], a[2]})) {
        out.push_back(*sc);
        continue;
      }
    }
    out.push_back(numeric_combination(m, point_balls(pt)));
  }
  if (out.empty()) throw Error(ErrorCode::NoSolution, "no combination of the quadrics is a square");
  return out;
}

std::array<HomPoly, 3> b4_quadrics(const Vec3& c, const std::array<Vec3, 2>& a, const std::array<Vec3, 2>& b) {
  HomPoly l = linear_form(c);
  std::array<HomPoly, 3> q{l * l, HomPoly(), HomPoly()};
  for (int j = 0; j < 2; ++j) {
    HomPoly p;
    for (int k = 0; k < 3; ++k) p += z(k) * z(k) * a[j][k];
    p += z(0) * z(1) * b[j][0] + z(0) * z(2) * b[j][1] + z(1) * z(2) * b[j][2];
    q[j + 1] = p;
  }
  return q;
}

B4Result b4_solve(const Vec3& c, const std::array<Vec3, 2>& a, const std::array<Vec3, 2>& b) {
  B4Result res;
  res.A[0] = {c[0] * c[0], c[1] * c[1], c[2] * c[2]};
  res.B[0] = {2 * c[0] * c[1], 2 * c[0] * c[2], 2 * c[1] * c[2]};
  for (int j = 0; j < 2; ++j) {
    res.A[j + 1] = a[j];
    res.B[j + 1] = b[j];
  }
  for (auto* mat : {&res.A, &res.B})
    for (auto& row : *mat)
      for (auto& x : row) x.canonicalize();
  res.detA = det(res.A);
  if (res.detA == 0) throw Error(ErrorCode::SingularA, "det A = 0");
  res.adjA = adjugate(res.A);
  res.quadrics = b4_quadrics(c, a, b);
  Mat3 ab = res.adjA * res.B;
  const std::array<HomPoly, 3> mons{z(0) * z(1), z(0) * z(2), z(1) * z(2)};
  for (int k = 0; k < 3; ++k) {
    HomPoly e = mons[k] * Rational(-2 * res.detA);
    for (int j = 0; j < 3; ++j) e += z(j) * z(j) * ab[j][k];
    res.equations[k] = e;
  }
  std::vector<HomPoly> system;
  for (const auto& e : res.equations)
    if (!e.is_zero()) system.push_back(e);

  std::vector<Mat3> qm;
  for (const auto& q : res.quadrics) qm.push_back(quadric_form(q).matrix);
  const std::vector<HomPoly> qv(res.quadrics.begin(), res.quadrics.end());

  for (const ProjVec& pt : common_zeros(system)) {
    B4Solution s;
    s.point = pt;
    for (int k = 0; k < 3; ++k) {
      Zero3 zk = pt.exact ? ((*pt.exact)[k].is_zero() ? Zero3::zero : Zero3::nonzero) : decide_zero(pt.ball[k]);
      if (zk == Zero3::zero) s.zero_coordinate = true;
    }
    if (pt.is_rational()) {
      Vec3 x = pt.rational();
      std::vector<Rational> w(3, Rational(0));
      for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j) w[k] += x[j] * x[j] * res.adjA[j][k];
      s.combination = exact_combination(qv, w);
      s.square = s.combination ? Tri::yes : Tri::no;
    } else {
      std::vector<CBall> w(3, CBall::exact(0));
      for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j) w[k] = w[k] + pt.ball[j] * pt.ball[j] * to_ball(res.adjA[j][k]);
      s.square = rank_one(combine(qm, w));
      if (s.square == Tri::yes) s.combination = numeric_combination(qm, w);
    }
    res.solutions.push_back(s);
  }
  return res;
}

}  // namespace pcurves
