#pragma once

#include <complex>
#include <string>
#include <vector>

#include "pcurves/poly/hompoly.hpp"

namespace pcurves {

using cplx = std::complex<double>;

/// Polynomial in xi with complex coefficients, low to high.
struct XiPoly {
  std::vector<cplx> c;

  XiPoly() = default;
  explicit XiPoly(std::vector<cplx> coeffs);
  int degree() const;  ///< -1 for zero
  bool is_constant() const { return degree() <= 0; }
  cplx operator()(cplx xi) const;
  XiPoly derivative() const;
  cplx leading(int lambda) const { return lambda < static_cast<int>(c.size()) ? c[lambda] : cplx(0); }
  friend XiPoly operator+(const XiPoly& a, const XiPoly& b);
  friend XiPoly operator-(const XiPoly& a, const XiPoly& b);
  friend XiPoly operator*(double s, const XiPoly& a);
  /// Coefficients agree within tol (absolute).
  bool near(const XiPoly& o, double tol = 1e-12) const;
  std::string to_string() const;
};

/// sum_k coeff_k * exp(exponent_k(xi)).
struct ExpTerm {
  cplx coeff;
  XiPoly exponent;
};

class ExpSum {
 public:
  ExpSum() = default;
  static ExpSum exp_of(XiPoly p);
  static ExpSum constant(cplx c);

  const std::vector<ExpTerm>& terms() const { return terms_; }
  /// Merges terms whose exponents differ by a constant and drops zero terms.
  void normalize();
  bool is_zero() const { return terms_.empty(); }

  /// g(xi) = exp(shift) * value.
  struct Scaled {
    double shift;
    cplx value;
    cplx deriv;       ///< g'(xi) / exp(shift)
    double magnitude;  ///< sum of |term| / exp(shift)
  };
  Scaled eval(cplx xi) const;
  double log_abs(cplx xi) const;

  friend ExpSum operator+(const ExpSum& a, const ExpSum& b);
  friend ExpSum operator*(const ExpSum& a, const ExpSum& b);
  friend ExpSum operator*(cplx s, const ExpSum& a);

 private:
  std::vector<ExpTerm> terms_;
};

/// [g_0 : ... : g_n] with entire components; order_bound is the declared lambda.
struct ExpCurve {
  std::vector<ExpSum> components;
  int order_bound = 1;

  /// [e^{P_0} : ... : e^{P_n}]. Throws InvalidArgument when deg P_j > lambda.
  static ExpCurve from_exponents(const std::vector<XiPoly>& exps, int lambda);
  int dim() const { return static_cast<int>(components.size()) - 1; }
  /// Every component is a constant multiple of one exponential e^{E}.
  bool is_constant() const;
  /// log max_j |g_j(xi)|.
  double log_max(cplx xi) const;
  /// log sum_j |g_j(xi)|^2.
  double log_norm2(cplx xi) const;
  std::vector<cplx> leading(int lambda) const;
};

/// The g_j are linearly independent over C.
bool linearly_nondegenerate(const ExpCurve& f);

/// P(g_0, ..., g_n); P may only involve z0..z_n (n <= 2).
ExpSum compose(const HomPoly& p, const ExpCurve& f);
/// R o f for a list of forms of common degree.
ExpCurve compose(const std::vector<HomPoly>& r, const ExpCurve& f);

/// "a", "bi", "a+bi", "a-bi", "i", "-i".
cplx parse_complex(const std::string& s);
std::string format_complex(cplx z);

}  // namespace pcurves
