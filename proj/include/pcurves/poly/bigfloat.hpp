#pragma once

#include <mpfr.h>

#include <complex>
#include <string>

#include <gmpxx.h>

namespace pcurves {

/// Working precision in bits used for newly created BigFloat values on this
/// thread. Defaults to 256.
long working_precision();

/// Sets the working precision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(long bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  long saved_;
};

/// RAII owner of an mpfr_t. Arithmetic operators round to nearest at the
/// current working precision.
class BigFloat {
 public:
  BigFloat();
  BigFloat(int v);     // NOLINT(google-explicit-constructor)
  BigFloat(long v);    // NOLINT(google-explicit-constructor)
  BigFloat(double v);  // NOLINT(google-explicit-constructor)
  explicit BigFloat(const mpq_class& q, mpfr_rnd_t rnd = MPFR_RNDN);
  explicit BigFloat(const mpz_class& z, mpfr_rnd_t rnd = MPFR_RNDN);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat from_string(const std::string& s);
  static BigFloat pow2(long e);

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  mpq_class to_rational() const;
  /// Binary exponent e such that 2^(e-1) <= |x| < 2^e; very negative for 0.
  long exponent() const;
  /// Decimal string with `digits` significant digits, scientific notation.
  std::string to_string(int digits) const;

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  BigFloat operator-() const;

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

 private:
  mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat max(const BigFloat& a, const BigFloat& b);
BigFloat min(const BigFloat& a, const BigFloat& b);

/// Complex number with BigFloat parts (round-to-nearest arithmetic).
struct BigComplex {
  BigFloat re;
  BigFloat im;

  BigComplex() = default;
  BigComplex(BigFloat r, BigFloat i = BigFloat(0)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT
  BigComplex(int r) : re(r), im(0) {}  // NOLINT
  explicit BigComplex(std::complex<double> z) : re(z.real()), im(z.imag()) {}

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  BigComplex operator-() const { return {-re, -im}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
  /// "a+bi" style string.
  std::string to_string(int digits) const;
};

BigFloat abs(const BigComplex& z);
BigFloat norm(const BigComplex& z);
BigComplex conj(const BigComplex& z);
BigComplex sqrt(const BigComplex& z);

/// Complex ball: every value within `rad` of `mid`. Operations round the
/// radius upward and account for rounding of the midpoint, so enclosures are
/// rigorous.
struct CBall {
  BigComplex mid;
  BigFloat rad;

  CBall() : mid(), rad(0) {}
  CBall(BigComplex m, BigFloat r = BigFloat(0)) : mid(std::move(m)), rad(std::move(r)) {}  // NOLINT
  static CBall exact(const mpq_class& re, const mpq_class& im = 0);

  bool contains_zero() const;
  /// Lower bound on |x| over the ball (0 if the ball contains 0).
  BigFloat abs_lower() const;
  BigFloat abs_upper() const;

  friend CBall operator+(const CBall& a, const CBall& b);
  friend CBall operator-(const CBall& a, const CBall& b);
  friend CBall operator*(const CBall& a, const CBall& b);
  /// Throws if the divisor ball contains zero.
  friend CBall operator/(const CBall& a, const CBall& b);
  CBall operator-() const { return {-mid, rad}; }
  CBall& operator+=(const CBall& o) { return *this = *this + o; }
  CBall& operator*=(const CBall& o) { return *this = *this * o; }
};

/// Rounded-upward helpers for radius bookkeeping.
BigFloat add_up(const BigFloat& a, const BigFloat& b);
BigFloat mul_up(const BigFloat& a, const BigFloat& b);
BigFloat div_up(const BigFloat& a, const BigFloat& b);
BigFloat abs_up(const BigComplex& z);
BigFloat abs_down(const BigComplex& z);

}  // namespace pcurves
