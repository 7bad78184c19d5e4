#pragma once

#include <utility>
#include <vector>

#include "pcurves/poly/rational.hpp"

namespace pcurves {

/// Dense univariate polynomial over Q, coefficients from low to high degree.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> c);
  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
  Rational lc() const { return c_.empty() ? Rational(0) : c_.back(); }

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const Rational& s);
  UniPoly operator-() const { return *this * Rational(-1); }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  UniPoly derivative() const;
  UniPoly monic() const;
  Rational eval(const Rational& t) const;
  CBall eval(const CBall& t) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Exact quotient; throws if b does not divide a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero if both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Yun's algorithm: returns (k, S_k) with a = lc * prod S_k^k, S_k squarefree, pairwise coprime
/// and non-constant.
std::vector<std::pair<int, UniPoly>> squarefree_decomposition(const UniPoly& a);

}  // namespace pcurves
