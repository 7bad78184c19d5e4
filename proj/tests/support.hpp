#pragma once

#include <random>

#include "pcurves/poly/hompoly.hpp"

namespace testsupport {

using pcurves::Exponent;
using pcurves::HomPoly;
using pcurves::Rational;

inline Rational small_rational(std::mt19937_64& rng, int span = 9, int den = 4) {
  std::uniform_int_distribution<int> n(-span, span);
  std::uniform_int_distribution<int> d(1, den);
  Rational q(n(rng), d(rng));
  q.canonicalize();
  return q;
}

inline HomPoly random_form(std::mt19937_64& rng, int degree, int span = 9) {
  std::vector<std::pair<Exponent, Rational>> ts;
  for (int a = degree; a >= 0; --a)
    for (int b = degree - a; b >= 0; --b) ts.push_back({{a, b, degree - a - b}, small_rational(rng, span)});
  HomPoly p = HomPoly::from_terms(ts);
  return p.is_zero() ? random_form(rng, degree, span) : p;
}

}  // namespace testsupport
