#include "pcurves/poly/resultant.hpp"

namespace pcurves {

UniPoly determinant(std::vector<std::vector<UniPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return UniPoly::constant(1);
  int sign = 1;
  UniPoly prev = UniPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return {};
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

BiPoly dehomogenize(const HomPoly& p, int v) {
  int a = v == 0 ? 1 : 0;
  int d = p.degree();
  BiPoly out(d < 0 ? 0 : d + 1);
  std::vector<std::vector<Rational>> raw(out.size());
  for (const auto& [e, c] : p.terms()) {
    auto& row = raw[e[v]];
    if (static_cast<int>(row.size()) <= e[a]) row.resize(e[a] + 1, Rational(0));
    row[e[a]] += c;
  }
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = UniPoly(raw[k]);
  return out;
}

namespace {

// Rows of the Sylvester-type matrix used for S_j, with width m+n-j.
std::vector<std::vector<UniPoly>> sylvester_rows(const BiPoly& p, const BiPoly& q, int j) {
  int m = static_cast<int>(p.size()) - 1;
  int n = static_cast<int>(q.size()) - 1;
  int width = m + n - j;
  std::vector<std::vector<UniPoly>> rows;
  // column c holds x^(width-1-c)
  for (int s = n - j - 1; s >= 0; --s) {
    std::vector<UniPoly> row(width);
    for (int k = 0; k <= m; ++k) row[width - 1 - (k + s)] = p[k];
    rows.push_back(std::move(row));
  }
  for (int s = m - j - 1; s >= 0; --s) {
    std::vector<UniPoly> row(width);
    for (int k = 0; k <= n; ++k) row[width - 1 - (k + s)] = q[k];
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

UniPoly sylvester_resultant(const BiPoly& p, const BiPoly& q) { return determinant(sylvester_rows(p, q, 0)); }

BiPoly subresultant(const BiPoly& p, const BiPoly& q, int j) {
  auto rows = sylvester_rows(p, q, j);
  int m = static_cast<int>(p.size()) - 1;
  int n = static_cast<int>(q.size()) - 1;
  int width = m + n - j;
  int lead = m + n - 2 * j - 1;
  BiPoly out(j + 1);
  for (int i = 0; i <= j; ++i) {
    std::vector<std::vector<UniPoly>> sq;
    for (const auto& r : rows) {
      std::vector<UniPoly> row(r.begin(), r.begin() + lead);
      row.push_back(r[width - 1 - i]);
      sq.push_back(std::move(row));
    }
    out[i] = determinant(std::move(sq));
  }
  return out;
}

HomPoly resultant(const HomPoly& p, const HomPoly& q, int v) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant of the zero polynomial");
  Exponent ep{0, 0, 0};
  Exponent eq{0, 0, 0};
  ep[v] = p.degree();
  eq[v] = q.degree();
  if (p.coeff(ep) == 0 && q.coeff(eq) == 0)
    throw Error(ErrorCode::DegenerateLeadingForm, "both leading coefficients in z" + std::to_string(v) + " vanish");
  int a = v == 0 ? 1 : 0;
  int b = v == 2 ? 1 : 2;
  UniPoly r = sylvester_resultant(dehomogenize(p, v), dehomogenize(q, v));
  int D = p.degree() * q.degree();
  std::vector<std::pair<Exponent, Rational>> ts;
  for (int k = 0; k <= r.degree(); ++k) {
    if (r.coeff(k) == 0) continue;
    Exponent e{0, 0, 0};
    e[a] = k;
    e[b] = D - k;
    ts.emplace_back(e, r.coeff(k));
  }
  return HomPoly::from_terms(ts);
}

}  // namespace pcurves
