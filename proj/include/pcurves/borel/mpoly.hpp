#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pcurves/poly/rational.hpp"

namespace pcurves {

/// Sparse polynomial over Q in a fixed number of variables.
class MPoly {
 public:
  using Mono = std::vector<int>;
  using TermMap = std::map<Mono, Rational, std::greater<Mono>>;

  explicit MPoly(int nvars = 0) : n_(nvars) {}
  static MPoly variable(int nvars, int i);
  static MPoly constant(int nvars, const Rational& c);

  int nvars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  Rational coeff(const Mono& m) const;
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const Rational& s);
  friend MPoly operator*(const Rational& s, const MPoly& a) { return a * s; }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
  MPoly pow(unsigned k) const;

  Rational eval(const std::vector<Rational>& x) const;

  /// Replaces variable i by vals[i]; `one` is the unit of T.
  template <typename T>
  T substitute(const std::vector<T>& vals, const T& one) const {
    std::vector<std::vector<T>> powers(vals.size(), std::vector<T>{one});
    T acc = one * Rational(0);
    for (const auto& [m, c] : terms_) {
      T t = one * c;
      for (std::size_t v = 0; v < m.size(); ++v) {
        while (static_cast<int>(powers[v].size()) <= m[v]) powers[v].push_back(powers[v].back() * vals[v]);
        if (m[v] > 0) t = t * powers[v][m[v]];
      }
      acc = acc + t;
    }
    return acc;
  }

  /// Terms in decreasing lexicographic order of exponents.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_term(const Mono& m, const Rational& c);
  int n_;
  TermMap terms_;
};

}  // namespace pcurves
