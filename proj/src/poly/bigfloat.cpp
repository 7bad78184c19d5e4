#include "pcurves/poly/bigfloat.hpp"

#include <cstdlib>
#include <memory>

#include "pcurves/error.hpp"

namespace pcurves {

namespace {
thread_local long g_prec = 256;
}

long working_precision() { return g_prec; }

PrecisionScope::PrecisionScope(long bits) : saved_(g_prec) { g_prec = bits; }
PrecisionScope::~PrecisionScope() { g_prec = saved_; }

BigFloat::BigFloat() {
  mpfr_init2(value_, g_prec);
  mpfr_set_zero(value_, 1);
}
BigFloat::BigFloat(int v) {
  mpfr_init2(value_, g_prec);
  mpfr_set_si(value_, v, MPFR_RNDN);
}
BigFloat::BigFloat(long v) {
  mpfr_init2(value_, g_prec);
  mpfr_set_si(value_, v, MPFR_RNDN);
}
BigFloat::BigFloat(double v) {
  mpfr_init2(value_, g_prec);
  mpfr_set_d(value_, v, MPFR_RNDN);
}
BigFloat::BigFloat(const mpq_class& q, mpfr_rnd_t rnd) {
  mpfr_init2(value_, g_prec);
  mpfr_set_q(value_, q.get_mpq_t(), rnd);
}
BigFloat::BigFloat(const mpz_class& z, mpfr_rnd_t rnd) {
  mpfr_init2(value_, g_prec);
  mpfr_set_z(value_, z.get_mpz_t(), rnd);
}
BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}
BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}
BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}
BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}
BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::from_string(const std::string& s) {
  BigFloat r;
  if (mpfr_set_str(r.value_, s.c_str(), 10, MPFR_RNDN) != 0 && !mpfr_number_p(r.value_))
    throw Error(ErrorCode::InvalidArgument, "bad decimal: " + s);
  return r;
}

BigFloat BigFloat::pow2(long e) {
  BigFloat r(1);
  mpfr_mul_2si(r.value_, r.value_, e, MPFR_RNDN);
  return r;
}

mpq_class BigFloat::to_rational() const {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

long BigFloat::exponent() const {
  if (mpfr_zero_p(value_)) return -(1L << 40);
  return static_cast<long>(mpfr_get_exp(value_));
}

std::string BigFloat::to_string(int digits) const {
  char* buf = nullptr;
  std::string fmt = "%." + std::to_string(digits > 1 ? digits - 1 : 0) + "Re";
  mpfr_asprintf(&buf, fmt.c_str(), value_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

namespace {
long prec_for(const BigFloat& a, const BigFloat& b) { return std::max({g_prec, a.precision(), b.precision()}); }
void widen(BigFloat& a, long p) {
  if (a.precision() < p) mpfr_prec_round(a.get(), p, MPFR_RNDN);
}
}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  widen(*this, prec_for(*this, o));
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& o) {
  widen(*this, prec_for(*this, o));
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& o) {
  widen(*this, prec_for(*this, o));
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& o) {
  widen(*this, prec_for(*this, o));
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x);
  mpfr_abs(r.get(), r.get(), MPFR_RNDN);
  return r;
}
BigFloat sqrt(const BigFloat& x) {
  BigFloat r;
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}
BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }
BigFloat min(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }

// ---- complex

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}
BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}
BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigFloat r = re * o.re - im * o.im;
  BigFloat i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}
BigComplex& BigComplex::operator/=(const BigComplex& o) {
  BigFloat d = o.re * o.re + o.im * o.im;
  BigFloat r = (re * o.re + im * o.im) / d;
  BigFloat i = (im * o.re - re * o.im) / d;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string BigComplex::to_string(int digits) const {
  std::string s = re.to_string(digits);
  std::string t = im.to_string(digits);
  if (t[0] != '-') s += '+';
  return s + t + "i";
}

BigFloat norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }
BigFloat abs(const BigComplex& z) {
  BigFloat r;
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}
BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }
BigComplex sqrt(const BigComplex& z) {
  BigFloat m = abs(z);
  if (m.is_zero()) return BigComplex(0);
  BigFloat a = sqrt((m + abs(z.re)) / BigFloat(2));
  BigFloat b = z.im / (BigFloat(2) * a);
  if (z.re.sign() >= 0) return {a, b};
  if (z.im.sign() >= 0) return {abs(b), a};
  return {abs(b), -a};
}

// ---- rounding helpers

BigFloat add_up(const BigFloat& a, const BigFloat& b) {
  BigFloat r;
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}
BigFloat mul_up(const BigFloat& a, const BigFloat& b) {
  BigFloat r;
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}
BigFloat div_up(const BigFloat& a, const BigFloat& b) {
  BigFloat r;
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}
BigFloat abs_up(const BigComplex& z) {
  BigFloat r;
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDU);
  return r;
}
BigFloat abs_down(const BigComplex& z) {
  BigFloat r;
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDD);
  return r;
}

// ---- balls
//
// Each midpoint operation is done with directed-rounding error tracking: the
// ternary value from MPFR tells us whether the result is exact, and if not we
// add one ulp of the result to the radius.

namespace {

BigFloat ulp_of(const BigFloat& x) {
  if (x.is_zero()) return BigFloat(0);
  BigFloat u(1);
  mpfr_mul_2si(u.get(), u.get(), x.exponent() - x.precision() + 1, MPFR_RNDU);
  return u;
}

// r = a op b with rounding error folded into err.
template <typename F>
BigFloat tracked(F f, const BigFloat& a, const BigFloat& b, BigFloat& err) {
  BigFloat r;
  int t = f(r.get(), a.get(), b.get(), MPFR_RNDN);
  if (t != 0) err = add_up(err, ulp_of(r));
  return r;
}

BigComplex cadd(const BigComplex& a, const BigComplex& b, BigFloat& err) {
  BigFloat e(0);
  BigComplex r{tracked(mpfr_add, a.re, b.re, e), tracked(mpfr_add, a.im, b.im, e)};
  err = add_up(err, e);
  return r;
}

BigComplex csub(const BigComplex& a, const BigComplex& b, BigFloat& err) {
  BigFloat e(0);
  BigComplex r{tracked(mpfr_sub, a.re, b.re, e), tracked(mpfr_sub, a.im, b.im, e)};
  err = add_up(err, e);
  return r;
}

BigComplex cmul(const BigComplex& a, const BigComplex& b, BigFloat& err) {
  BigFloat e(0);
  BigFloat p1 = tracked(mpfr_mul, a.re, b.re, e);
  BigFloat p2 = tracked(mpfr_mul, a.im, b.im, e);
  BigFloat p3 = tracked(mpfr_mul, a.re, b.im, e);
  BigFloat p4 = tracked(mpfr_mul, a.im, b.re, e);
  BigComplex r{tracked(mpfr_sub, p1, p2, e), tracked(mpfr_add, p3, p4, e)};
  err = add_up(err, e);
  return r;
}

}  // namespace

CBall CBall::exact(const mpq_class& re, const mpq_class& im) {
  BigFloat r(0);
  BigFloat a;
  BigFloat b;
  if (mpfr_set_q(a.get(), re.get_mpq_t(), MPFR_RNDN) != 0) r = add_up(r, ulp_of(a));
  if (mpfr_set_q(b.get(), im.get_mpq_t(), MPFR_RNDN) != 0) r = add_up(r, ulp_of(b));
  return {BigComplex(a, b), r};
}

bool CBall::contains_zero() const { return abs_down(mid) <= rad; }

BigFloat CBall::abs_lower() const {
  BigFloat m = abs_down(mid);
  if (m <= rad) return BigFloat(0);
  BigFloat r;
  mpfr_sub(r.get(), m.get(), rad.get(), MPFR_RNDD);
  return r;
}

BigFloat CBall::abs_upper() const { return add_up(abs_up(mid), rad); }

CBall operator+(const CBall& a, const CBall& b) {
  BigFloat err = add_up(a.rad, b.rad);
  BigComplex m = cadd(a.mid, b.mid, err);
  return {std::move(m), std::move(err)};
}

CBall operator-(const CBall& a, const CBall& b) {
  BigFloat err = add_up(a.rad, b.rad);
  BigComplex m = csub(a.mid, b.mid, err);
  return {std::move(m), std::move(err)};
}

CBall operator*(const CBall& a, const CBall& b) {
  // |xy - ab| <= |a| rb + |b| ra + ra rb
  BigFloat err = add_up(add_up(mul_up(abs_up(a.mid), b.rad), mul_up(abs_up(b.mid), a.rad)), mul_up(a.rad, b.rad));
  BigComplex m = cmul(a.mid, b.mid, err);
  return {std::move(m), std::move(err)};
}

CBall operator/(const CBall& a, const CBall& b) {
  BigFloat lo = b.abs_lower();
  if (lo.is_zero()) throw Error(ErrorCode::PrecisionExhausted, "ball division by a ball containing zero");
  // 1/y for y in B(m, r): centre 1/m, radius r / (|m| (|m| - r))
  BigComplex inv = BigComplex(1) / b.mid;
  // a few ulps cover the rounding of the complex reciprocal
  BigFloat e = mul_up(ulp_of(abs_up(inv)), BigFloat(8));
  BigFloat md = abs_down(b.mid);
  BigFloat denom;
  mpfr_mul(denom.get(), md.get(), lo.get(), MPFR_RNDD);
  BigFloat rinv = add_up(div_up(b.rad, denom), e);
  return a * CBall(inv, rinv);
}

}  // namespace pcurves
