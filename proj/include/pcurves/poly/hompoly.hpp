#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "pcurves/error.hpp"
#include "pcurves/poly/rational.hpp"

namespace pcurves {

using Exponent = std::array<int, 3>;

inline int total_degree(const Exponent& e) { return e[0] + e[1] + e[2]; }

/// Graded lexicographic with z0 > z1 > z2; maps iterate from the largest term.
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Homogeneous polynomial in z0, z1, z2 over a field F (Rational or GaussRat).
/// The zero polynomial has no terms and degree -1.
template <typename F>
class BasicHomPoly {
 public:
  using Coeff = F;
  using TermMap = std::map<Exponent, F, GradedLexGreater>;

  BasicHomPoly() = default;

  static BasicHomPoly variable(int i) {
    Exponent e{0, 0, 0};
    e[i] = 1;
    return monomial(e, F(1));
  }
  static BasicHomPoly constant(const F& c) { return monomial({0, 0, 0}, c); }
  static BasicHomPoly monomial(const Exponent& e, const F& c) {
    BasicHomPoly p;
    if (!pcurves::is_zero(c)) {
      p.terms_.emplace(e, c);
      p.degree_ = total_degree(e);
    }
    return p;
  }
  /// Builds from a term list; throws NotHomogeneous on mixed degrees.
  static BasicHomPoly from_terms(const std::vector<std::pair<Exponent, F>>& ts) {
    BasicHomPoly p;
    for (const auto& [e, c] : ts) p.add_term(e, c);
    p.check_homogeneous();
    return p;
  }

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  F coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? F(0) : it->second;
  }

  /// Largest power of z_v occurring (0 for constants, -1 for zero).
  int degree_in(int v) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
    return d;
  }

  BasicHomPoly& operator+=(const BasicHomPoly& o) {
    require_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    fix_degree();
    return *this;
  }
  BasicHomPoly& operator-=(const BasicHomPoly& o) {
    require_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    fix_degree();
    return *this;
  }
  friend BasicHomPoly operator+(BasicHomPoly a, const BasicHomPoly& b) { return a += b; }
  friend BasicHomPoly operator-(BasicHomPoly a, const BasicHomPoly& b) { return a -= b; }
  BasicHomPoly operator-() const { return *this * F(-1); }

  friend BasicHomPoly operator*(const BasicHomPoly& a, const BasicHomPoly& b) {
    BasicHomPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    r.fix_degree();
    return r;
  }
  friend BasicHomPoly operator*(const BasicHomPoly& a, const F& s) {
    BasicHomPoly r;
    if (pcurves::is_zero(s)) return r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, c * s);
    r.degree_ = a.degree_;
    return r;
  }
  friend BasicHomPoly operator*(const F& s, const BasicHomPoly& a) { return a * s; }
  BasicHomPoly& operator*=(const BasicHomPoly& o) { return *this = *this * o; }

  BasicHomPoly pow(unsigned k) const {
    BasicHomPoly r = constant(F(1));
    BasicHomPoly b = *this;
    while (k) {
      if (k & 1u) r = r * b;
      k >>= 1u;
      if (k) b = b * b;
    }
    return r;
  }

  friend bool operator==(const BasicHomPoly& a, const BasicHomPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BasicHomPoly& a, const BasicHomPoly& b) { return !(a == b); }

  BasicHomPoly derivative(int v) const {
    BasicHomPoly r;
    for (const auto& [e, c] : terms_) {
      if (e[v] == 0) continue;
      Exponent f = e;
      --f[v];
      r.add_term(f, c * F(e[v]));
    }
    r.fix_degree();
    return r;
  }

  template <typename T>
  T eval(const std::array<T, 3>& z) const {
    T acc(0);
    for (const auto& [e, c] : terms_) {
      T m = T(c);
      for (int v = 0; v < 3; ++v)
        for (int k = 0; k < e[v]; ++k) m = m * z[v];
      acc = acc + m;
    }
    return acc;
  }

  CBall eval_ball(const std::array<CBall, 3>& z) const {
    CBall acc;
    for (const auto& [e, c] : terms_) {
      CBall m = to_ball(c);
      for (int v = 0; v < 3; ++v)
        for (int k = 0; k < e[v]; ++k) m = m * z[v];
      acc = acc + m;
    }
    return acc;
  }

  /// Substitutes z_v -> sub[v]; the subs must share one degree.
  BasicHomPoly compose(const std::array<BasicHomPoly, 3>& sub) const {
    BasicHomPoly r;
    std::array<std::vector<BasicHomPoly>, 3> powers;
    for (int v = 0; v < 3; ++v) powers[v].push_back(constant(F(1)));
    for (const auto& [e, c] : terms_) {
      BasicHomPoly m = constant(c);
      for (int v = 0; v < 3; ++v) {
        while (static_cast<int>(powers[v].size()) <= e[v]) powers[v].push_back(powers[v].back() * sub[v]);
        m = m * powers[v][e[v]];
      }
      r += m;
    }
    return r;
  }

  template <typename G, typename Fn>
  BasicHomPoly<G> map_coeffs(Fn fn) const {
    std::vector<std::pair<Exponent, G>> ts;
    for (const auto& [e, c] : terms_) ts.emplace_back(e, fn(c));
    return BasicHomPoly<G>::from_terms(ts);
  }

  /// Grammar-conformant text for rational polynomials; Gaussian coefficients
  /// print as "(a+bi)" which is informational only.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      bool neg = false;
      std::string cs = coeff_text(c, neg);
      std::string mono = monomial_text(e);
      if (first && neg) {
        cs = signed_text(c);
        neg = false;
      } else if (!first) {
        out += neg ? " - " : " + ";
      }
      first = false;
      if (mono.empty()) {
        out += cs.empty() ? "1" : cs;
      } else {
        out += cs.empty() ? mono : cs + "*" + mono;
      }
    }
    return out;
  }

 private:
  void add_term(const Exponent& e, const F& c) {
    if (pcurves::is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (pcurves::is_zero(it->second)) terms_.erase(it);
    }
  }
  void fix_degree() { degree_ = terms_.empty() ? -1 : total_degree(terms_.begin()->first); }
  void check_homogeneous() {
    std::vector<int> degs;
    for (const auto& [e, c] : terms_) {
      int d = total_degree(e);
      if (std::find(degs.begin(), degs.end(), d) == degs.end()) degs.push_back(d);
    }
    if (degs.size() > 1) {
      std::sort(degs.begin(), degs.end());
      throw NotHomogeneous(degs);
    }
    fix_degree();
  }
  void require_compatible(const BasicHomPoly& o) const {
    if (degree_ >= 0 && o.degree_ >= 0 && degree_ != o.degree_) throw NotHomogeneous({std::min(degree_, o.degree_), std::max(degree_, o.degree_)});
  }
  static std::string monomial_text(const Exponent& e) {
    std::string s;
    for (int v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      if (!s.empty()) s += "*";
      s += "z" + std::to_string(v);
      if (e[v] > 1) s += "^" + std::to_string(e[v]);
    }
    return s;
  }
  static std::string coeff_text(const Rational& c, bool& neg) {
    neg = sgn(c) < 0;
    Rational a = abs(c);
    if (a == 1) return "";
    if (a.get_den() == 1) return a.get_num().get_str();
    return "(" + a.get_num().get_str() + "/" + a.get_den().get_str() + ")";
  }
  // leading negative coefficient, spelled so the grammar accepts it
  static std::string signed_text(const Rational& c) {
    if (c.get_den() == 1) return c.get_num().get_str();
    return "(" + c.get_num().get_str() + "/" + c.get_den().get_str() + ")";
  }
  static std::string signed_text(const GaussRat& c) { return signed_text(c.re); }
  static std::string coeff_text(const GaussRat& c, bool& neg) {
    if (c.im == 0) return coeff_text(c.re, neg);
    neg = false;
    return "(" + pcurves::to_string(c) + ")";
  }

  TermMap terms_;
  int degree_ = -1;
};

using HomPoly = BasicHomPoly<Rational>;
using GaussianHomPoly = BasicHomPoly<GaussRat>;

GaussianHomPoly to_gaussian(const HomPoly& p);

/// Ball enclosure of p at a point given by coordinate balls. Inputs carry their
/// own radii; the output radius accounts for them and for rounding. Throws
/// PrecisionExhausted when the result radius exceeds `max_radius` (if given).
CBall gaussian_extension_eval(const HomPoly& p, const std::array<CBall, 3>& point);
CBall gaussian_extension_eval(const HomPoly& p, const std::array<CBall, 3>& point, const BigFloat& max_radius);

/// Common variables.
inline HomPoly z(int i) { return HomPoly::variable(i); }

/// Linear form c0 z0 + c1 z1 + c2 z2.
HomPoly linear_form(const std::array<Rational, 3>& c);
std::array<Rational, 3> linear_coeffs(const HomPoly& l);

}  // namespace pcurves
