#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "pcurves/poly/bigfloat.hpp"

namespace pcurves {

using Rational = mpq_class;

/// "num/den" form used in reports.
std::string to_string(const Rational& q);
/// Accepts "n", "-n", "n/d", and finite decimals such as "1.25" or "-3e-2".
Rational parse_rational(const std::string& s);

/// Simplest rational (smallest denominator) in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Rational with denominator <= max_den lying within `rad` of `x`, if any.
std::optional<Rational> recognize_rational(const BigFloat& x, const BigFloat& rad, const mpz_class& max_den);

/// Element of Q(i).
struct GaussRat {
  Rational re;
  Rational im;

  GaussRat() : re(0), im(0) {}
  GaussRat(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT
  GaussRat(int r) : re(r), im(0) {}  // NOLINT

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussRat conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o);
  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  GaussRat operator-() const { return {-re, -im}; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

std::string to_string(const GaussRat& g);
CBall to_ball(const Rational& q);
CBall to_ball(const GaussRat& g);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const GaussRat& g) { return g.is_zero(); }

}  // namespace pcurves
