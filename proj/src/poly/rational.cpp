#include "pcurves/poly/rational.hpp"

#include <cctype>

#include "pcurves/error.hpp"

namespace pcurves {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw Error(ErrorCode::InvalidArgument, "empty number");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw Error(ErrorCode::InvalidArgument, "bad rational: " + s);
    q.canonicalize();
    return q;
  }
  // decimal with optional exponent
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
  mpz_class digits = 0;
  long scale = 0;
  bool any = false;
  bool dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = digits * 10 + (c - '0');
      if (dot) --scale;
      any = true;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (!any) throw Error(ErrorCode::InvalidArgument, "bad number: " + s);
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw Error(ErrorCode::InvalidArgument, "bad number: " + s);
    try {
      std::size_t used = 0;
      long e = std::stol(s.substr(i + 1), &used);
      if (used != s.size() - i - 1) throw Error(ErrorCode::InvalidArgument, "bad number: " + s);
      scale += e;
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidArgument, "bad number: " + s);
    }
  }
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  Rational q = scale < 0 ? Rational(digits, p) : Rational(digits * p);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

Rational simplest_between(const Rational& lo_in, const Rational& hi_in) {
  Rational lo = lo_in;
  Rational hi = hi_in;
  if (hi < lo) std::swap(lo, hi);
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -simplest_between(-hi, -lo);
  // continued fraction walk on positive interval
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  Rational f(fl);
  if (f == lo) return f;
  if (f + 1 <= hi) return Rational(fl + 1);
  Rational inner = simplest_between(1 / (hi - f), 1 / (lo - f));
  Rational r = f + 1 / inner;
  r.canonicalize();
  return r;
}

std::optional<Rational> recognize_rational(const BigFloat& x, const BigFloat& rad, const mpz_class& max_den) {
  Rational c = x.to_rational();
  Rational r = rad.to_rational();
  Rational q = simplest_between(c - r, c + r);
  if (q.get_den() > max_den) return std::nullopt;
  return q;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  Rational n = o.norm();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  Rational r = (re * o.re + im * o.im) / n;
  im = (im * o.re - re * o.im) / n;
  re = r;
  return *this;
}

std::string to_string(const GaussRat& g) {
  if (g.im == 0) return to_string(g.re);
  std::string s = to_string(g.re);
  s += (sgn(g.im) < 0 ? "-" : "+");
  return s + to_string(Rational(abs(g.im))) + "i";
}

CBall to_ball(const Rational& q) { return CBall::exact(q); }
CBall to_ball(const GaussRat& g) { return CBall::exact(g.re, g.im); }

}  // namespace pcurves
