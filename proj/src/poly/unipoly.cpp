#include "pcurves/poly/unipoly.hpp"

#include "pcurves/error.hpp"

namespace pcurves {

UniPoly::UniPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(r));
}

UniPoly operator*(const UniPoly& a, const Rational& s) {
  if (s == 0) return {};
  std::vector<Rational> r = a.c_;
  for (auto& x : r) x *= s;
  return UniPoly(std::move(r));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this * Rational(1 / lc());
}

Rational UniPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

CBall UniPoly::eval(const CBall& t) const {
  CBall acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + to_ball(*it);
  return acc;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {UniPoly(), a};
  std::vector<Rational> q(da - db + 1, Rational(0));
  Rational inv = 1 / b.lc();
  for (int i = da; i >= db; --i) {
    Rational f = r[i] * inv;
    if (f == 0) continue;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
  }
  r.resize(db);
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
  return q;
}

UniPoly gcd(const UniPoly& a_in, const UniPoly& b_in) {
  UniPoly a = a_in;
  UniPoly b = b_in;
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::vector<std::pair<int, UniPoly>> squarefree_decomposition(const UniPoly& f) {
  std::vector<std::pair<int, UniPoly>> out;
  if (f.degree() <= 0) return out;
  UniPoly a = f.monic();
  UniPoly da = a.derivative();
  UniPoly g = gcd(a, da);
  UniPoly b = exact_div(a, g);
  UniPoly c = exact_div(da, g);
  UniPoly d = c - b.derivative();
  for (int k = 1; b.degree() > 0; ++k) {
    UniPoly h = gcd(b, d);
    if (h.degree() > 0) out.emplace_back(k, h);
    b = exact_div(b, h);
    c = exact_div(d, h);
    d = c - b.derivative();
  }
  return out;
}

}  // namespace pcurves
