#include "pcurves/nevanlinna/expcurve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "pcurves/error.hpp"

namespace pcurves {

XiPoly::XiPoly(std::vector<cplx> coeffs) : c(std::move(coeffs)) {}

int XiPoly::degree() const {
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
    if (c[k] != cplx(0)) return k;
  return -1;
}

cplx XiPoly::operator()(cplx xi) const {
  cplx acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * xi + *it;
  return acc;
}

XiPoly XiPoly::derivative() const {
  std::vector<cplx> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<double>(k) * c[k]);
  return XiPoly(d);
}

XiPoly operator+(const XiPoly& a, const XiPoly& b) {
  std::vector<cplx> r(std::max(a.c.size(), b.c.size()), 0.0);
  for (std::size_t k = 0; k < a.c.size(); ++k) r[k] += a.c[k];
  for (std::size_t k = 0; k < b.c.size(); ++k) r[k] += b.c[k];
  return XiPoly(r);
}

XiPoly operator-(const XiPoly& a, const XiPoly& b) { return a + (-1.0) * b; }

XiPoly operator*(double s, const XiPoly& a) {
  XiPoly r = a;
  for (auto& x : r.c) x *= s;
  return r;
}

bool XiPoly::near(const XiPoly& o, double tol) const {
  std::size_t n = std::max(c.size(), o.c.size());
  for (std::size_t k = 0; k < n; ++k) {
    cplx a = k < c.size() ? c[k] : cplx(0), b = k < o.c.size() ? o.c[k] : cplx(0);
    if (std::abs(a - b) > tol * (1 + std::abs(a) + std::abs(b))) return false;
  }
  return true;
}

std::string XiPoly::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == cplx(0)) continue;
    if (!s.empty()) s += " + ";
    s += "(" + format_complex(c[k]) + ")";
    if (k >= 1) s += "*xi";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

ExpSum ExpSum::exp_of(XiPoly p) {
  ExpSum s;
  s.terms_.push_back({1.0, std::move(p)});
  s.normalize();
  return s;
}

ExpSum ExpSum::constant(cplx c) {
  ExpSum s;
  s.terms_.push_back({c, XiPoly()});
  s.normalize();
  return s;
}

void ExpSum::normalize() {
  std::vector<ExpTerm> out;
  std::vector<double> mass;
  for (ExpTerm t : terms_) {
    if (!t.exponent.c.empty()) {
      t.coeff *= std::exp(t.exponent.c[0]);
      t.exponent.c[0] = 0;
    }
    while (!t.exponent.c.empty() && t.exponent.c.back() == cplx(0)) t.exponent.c.pop_back();
    auto it = std::find_if(out.begin(), out.end(), [&](const ExpTerm& o) { return o.exponent.near(t.exponent, 1e-13); });
    if (it == out.end()) {
      out.push_back(t);
      mass.push_back(std::abs(t.coeff));
    } else {
      it->coeff += t.coeff;
      mass[it - out.begin()] += std::abs(t.coeff);
    }
  }
  terms_.clear();
  for (std::size_t k = 0; k < out.size(); ++k)
    if (std::abs(out[k].coeff) > 1e-12 * mass[k]) terms_.push_back(out[k]);
}

ExpSum::Scaled ExpSum::eval(cplx xi) const {
  Scaled s{-std::numeric_limits<double>::infinity(), 0.0, 0.0, 0.0};
  std::vector<cplx> e;
  for (const auto& t : terms_) {
    e.push_back(t.exponent(xi));
    s.shift = std::max(s.shift, e.back().real());
  }
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    cplx w = terms_[k].coeff * std::exp(e[k] - s.shift);
    s.value += w;
    s.deriv += w * terms_[k].exponent.derivative()(xi);
    s.magnitude += std::abs(w);
  }
  return s;
}

double ExpSum::log_abs(cplx xi) const {
  Scaled s = eval(xi);
  return s.shift + std::log(std::abs(s.value));
}

ExpSum operator+(const ExpSum& a, const ExpSum& b) {
  ExpSum r = a;
  r.terms_.insert(r.terms_.end(), b.terms_.begin(), b.terms_.end());
  r.normalize();
  return r;
}

ExpSum operator*(const ExpSum& a, const ExpSum& b) {
  ExpSum r;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) r.terms_.push_back({x.coeff * y.coeff, x.exponent + y.exponent});
  r.normalize();
  return r;
}

ExpSum operator*(cplx s, const ExpSum& a) {
  ExpSum r = a;
  for (auto& t : r.terms_) t.coeff *= s;
  r.normalize();
  return r;
}

ExpCurve ExpCurve::from_exponents(const std::vector<XiPoly>& exps, int lambda) {
  if (exps.size() < 2) throw Error(ErrorCode::InvalidArgument, "a curve needs at least two components");
  ExpCurve f;
  f.order_bound = lambda;
  for (const auto& p : exps) {
    if (p.degree() > lambda) throw Error(ErrorCode::InvalidArgument, "exponent degree exceeds the order bound");
    f.components.push_back(ExpSum::exp_of(p));
  }
  return f;
}

bool ExpCurve::is_constant() const {
  const XiPoly* ref = nullptr;
  for (const auto& g : components) {
    if (g.terms().size() > 1) return false;
    if (g.terms().empty()) continue;
    if (!ref)
      ref = &g.terms()[0].exponent;
    else if (!ref->near(g.terms()[0].exponent))
      return false;
  }
  return true;
}

double ExpCurve::log_max(cplx xi) const {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& g : components)
    if (!g.is_zero()) m = std::max(m, g.log_abs(xi));
  return m;
}

double ExpCurve::log_norm2(cplx xi) const {
  std::vector<double> s;
  for (const auto& g : components)
    if (!g.is_zero()) s.push_back(g.log_abs(xi));
  double m = *std::max_element(s.begin(), s.end());
  double acc = 0;
  for (double x : s) acc += std::exp(2 * (x - m));
  return 2 * m + std::log(acc);
}

std::vector<cplx> ExpCurve::leading(int lambda) const {
  std::vector<cplx> out;
  for (const auto& g : components)
    for (const auto& t : g.terms()) out.push_back(t.exponent.leading(lambda));
  return out;
}

bool linearly_nondegenerate(const ExpCurve& f) {
  std::vector<XiPoly> basis;
  for (const auto& g : f.components)
    for (const auto& t : g.terms())
      if (std::none_of(basis.begin(), basis.end(), [&](const XiPoly& b) { return b.near(t.exponent, 1e-13); })) basis.push_back(t.exponent);
  const std::size_t rows = f.components.size(), cols = basis.size();
  if (cols < rows) return false;
  std::vector<std::vector<cplx>> m(rows, std::vector<cplx>(cols, 0.0));
  double scale = 0;
  for (std::size_t i = 0; i < rows; ++i)
    for (const auto& t : f.components[i].terms())
      for (std::size_t k = 0; k < cols; ++k)
        if (basis[k].near(t.exponent, 1e-13)) {
          m[i][k] = t.coeff;
          scale = std::max(scale, std::abs(t.coeff));
        }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    for (std::size_t i = rank; i < rows; ++i)
      if (std::abs(m[i][col]) > std::abs(m[piv][col])) piv = i;
    if (std::abs(m[piv][col]) <= 1e-10 * scale) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      cplx r = m[i][col] / m[rank][col];
      for (std::size_t k = col; k < cols; ++k) m[i][k] -= r * m[rank][k];
    }
    ++rank;
  }
  return rank == rows;
}

ExpSum compose(const HomPoly& p, const ExpCurve& f) {
  const int n = f.dim();
  if (n < 1 || n > 2) throw Error(ErrorCode::InvalidArgument, "curves in P^1 or P^2 only");
  ExpSum out;
  for (const auto& [e, c] : p.terms()) {
    for (int k = n + 1; k < 3; ++k)
      if (e[k] > 0) throw Error(ErrorCode::InvalidArgument, "divisor uses a coordinate the curve does not have");
    ExpSum t = ExpSum::constant(c.get_d());
    for (int k = 0; k <= n; ++k)
      for (int i = 0; i < e[k]; ++i) t = t * f.components[k];
    out = out + t;
  }
  return out;
}

ExpCurve compose(const std::vector<HomPoly>& r, const ExpCurve& f) {
  ExpCurve g;
  g.order_bound = f.order_bound;
  for (const auto& q : r) g.components.push_back(compose(q, f));
  return g;
}

cplx parse_complex(const std::string& in) {
  std::string s;
  for (char ch : in)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw SyntaxError(0, "empty complex number");
  auto num = [&](const std::string& t, std::size_t at) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      throw SyntaxError(at, "bad number '" + t + "'");
    }
    if (used != t.size()) throw SyntaxError(at + used, "bad number '" + t + "'");
    return v;
  };
  if (s.back() != 'i') return {num(s, 0), 0.0};
  std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;)
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  if (split == std::string::npos) return {0.0, num(body, 0)};
  return {num(body.substr(0, split), 0), num(body.substr(split), split)};
}

std::string format_complex(cplx z) {
  char buf[64];
  if (z.imag() == 0) {
    std::snprintf(buf, sizeof buf, "%.17g", z.real());
  } else if (z.real() == 0) {
    std::snprintf(buf, sizeof buf, "%.17gi", z.imag());
  } else {
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  }
  return buf;
}

}  // namespace pcurves
