#include "pcurves/borel/mpoly.hpp"

#include <numeric>

#include "pcurves/error.hpp"

namespace pcurves {

MPoly MPoly::variable(int nvars, int i) {
  MPoly p(nvars);
  Mono m(nvars, 0);
  m[i] = 1;
  p.terms_[m] = 1;
  return p;
}

MPoly MPoly::constant(int nvars, const Rational& c) {
  MPoly p(nvars);
  if (c != 0) p.terms_[Mono(nvars, 0)] = c;
  return p;
}

Rational MPoly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
  return d;
}

bool MPoly::is_homogeneous() const {
  int d = degree();
  for (const auto& [m, c] : terms_)
    if (std::accumulate(m.begin(), m.end(), 0) != d) return false;
  return true;
}

void MPoly::add_term(const Mono& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.n_ != n_) throw Error(ErrorCode::InvalidArgument, "variable counts differ");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.n_ != n_) throw Error(ErrorCode::InvalidArgument, "variable counts differ");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::InvalidArgument, "variable counts differ");
  MPoly r(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      MPoly::Mono m(a.n_);
      for (int i = 0; i < a.n_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

MPoly operator*(const MPoly& a, const Rational& s) {
  MPoly r(a.n_);
  if (s == 0) return r;
  for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, c * s);
  return r;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly r = constant(n_, 1), b = *this;
  while (k) {
    if (k & 1u) r = r * b;
    k >>= 1u;
    if (k) b = b * b;
  }
  return r;
}

Rational MPoly::eval(const std::vector<Rational>& x) const {
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < m[i]; ++k) t *= x[i];
    acc += t;
  }
  return acc;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (int i = 0; i < n_; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    Rational a = abs(c);
    std::string coef = pcurves::to_string(a);
    if (a.get_den() != 1) coef = "(" + coef + ")";
    std::string body = mono.empty() ? coef : (a == 1 ? mono : coef + "*" + mono);
    if (s.empty()) {
      s = (c < 0 ? "-" : "") + body;
    } else {
      s += (c < 0 ? " - " : " + ") + body;
    }
  }
  return s;
}

}  // namespace pcurves
