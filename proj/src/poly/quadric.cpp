#include "pcurves/poly/quadric.hpp"

namespace pcurves {

Mat3 mat_zero() {
  Mat3 m;
  for (auto& r : m)
    for (auto& x : r) x = 0;
  return m;
}

Mat3 mat_identity() {
  Mat3 m = mat_zero();
  for (int i = 0; i < 3; ++i) m[i][i] = 1;
  return m;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r = mat_zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

Mat3 operator+(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][j] + b[i][j];
  return r;
}

Mat3 operator*(const Rational& s, const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = s * a[i][j];
  return r;
}

Vec3 operator*(const Mat3& a, const Vec3& v) {
  Vec3 r{0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) r[i] += a[i][k] * v[k];
  return r;
}

Mat3 transpose(const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
  return r;
}

Rational det(const Mat3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Mat3 adjugate(const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      // cyclic index choice bakes in the cofactor sign
      r[i][j] = a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
    }
  return r;
}

int rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  int rk = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rk) < rows; ++c) {
    std::size_t piv = rk;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[rk], m[piv]);
    for (std::size_t i = rk + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[rk][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rk][j];
    }
    ++rk;
  }
  return rk;
}

int rank(const Mat3& a) {
  std::vector<std::vector<Rational>> m(3);
  for (int i = 0; i < 3; ++i) m[i].assign(a[i].begin(), a[i].end());
  return rank(std::move(m));
}

std::vector<std::vector<Rational>> null_space(std::vector<std::vector<Rational>> m, std::size_t cols) {
  // reduced row echelon form
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    Rational inv = 1 / m[r][c];
    for (std::size_t j = 0; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free)) != pivot_col.end()) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

QuadricForm quadric_form(const HomPoly& p) {
  if (p.degree() != 2) throw Error(ErrorCode::WrongDegree, "quadric_form needs degree 2, got " + std::to_string(p.degree()));
  QuadricForm q;
  q.matrix = mat_zero();
  for (const auto& [e, c] : p.terms()) {
    int i = -1, j = -1;
    for (int v = 0; v < 3; ++v) {
      if (e[v] == 2) i = j = v;
      if (e[v] == 1) (i < 0 ? i : j) = v;
    }
    if (i == j) {
      q.matrix[i][i] = c;
    } else {
      q.matrix[i][j] = c / 2;
      q.matrix[j][i] = c / 2;
    }
  }
  q.det = det(q.matrix);
  q.rank = rank(q.matrix);
  return q;
}

HomPoly poly_from_matrix(const Mat3& m) {
  std::vector<std::pair<Exponent, Rational>> ts;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Exponent e{0, 0, 0};
      ++e[i];
      ++e[j];
      Rational c = i == j ? m[i][i] : m[i][j] + m[j][i];
      if (c != 0) ts.emplace_back(e, c);
    }
  return HomPoly::from_terms(ts);
}

HomPoly dual_conic(const HomPoly& p) { return poly_from_matrix(adjugate(quadric_form(p).matrix)); }

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return Rational(sn, sd);
}

std::optional<SquareRoot> square_root(const HomPoly& p) {
  if (p.degree() != 2) return std::nullopt;
  QuadricForm q = quadric_form(p);
  if (q.rank != 1) return std::nullopt;
  int i = 0;
  while (q.matrix[i][i] == 0) ++i;
  // p = (1/M_ii) (sum_j M_ij z_j)^2
  Vec3 row = q.matrix[i];
  mpz_class l = 1;
  for (auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  mpz_class g = 0;
  std::array<mpz_class, 3> ints;
  for (int k = 0; k < 3; ++k) {
    Rational v = row[k] * l;
    ints[k] = v.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[k].get_mpz_t());
  }
  int first = 0;
  while (ints[first] == 0) ++first;
  if (ints[first] < 0) g = -g;
  Vec3 lin;
  for (int k = 0; k < 3; ++k) lin[k] = Rational(ints[k] / g);
  // row = (g / l) * lin, so p = (g/l)^2 / M_ii * lin^2
  Rational s(g, l);
  s.canonicalize();
  SquareRoot out;
  out.radicand = s * s / q.matrix[i][i];
  out.linear = linear_form(lin);
  if (auto r = rational_sqrt(out.radicand)) {
    out.linear = out.linear * *r;
    out.radicand = 1;
  }
  return out;
}

}  // namespace pcurves
