#include "pcurves/borel/borel.hpp"

namespace pcurves {

MPoly sign_product(int j) {
  if (j < 1 || j > 4) throw Error(ErrorCode::InvalidArgument, "R_j is provided for 1 <= j <= 4");
  const int n = j + 1;
  MPoly prod = MPoly::constant(n, 1);
  for (int mask = 0; mask < (1 << j); ++mask) {
    MPoly f = MPoly::variable(n, 0);
    for (int i = 1; i <= j; ++i) {
      MPoly x = MPoly::variable(n, i);
      f = (mask >> (i - 1)) & 1 ? f - x : f + x;
    }
    prod = prod * f;
  }
  return prod;
}

SignProductPoly generate_R(int j) {
  MPoly prod = sign_product(j);
  MPoly r(j + 1);
  for (const auto& [m, c] : prod.terms()) {
    MPoly::Mono half(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] % 2) throw Error(ErrorCode::InvalidArgument, "sign product is not even");
      half[i] = m[i] / 2;
    }
    MPoly t = MPoly::constant(j + 1, c);
    for (std::size_t i = 0; i < half.size(); ++i) t = t * MPoly::variable(j + 1, static_cast<int>(i)).pow(half[i]);
    r += t;
  }
  return {j, r};
}

MPoly expand_S(const Rational& a, const Rational& b, const Rational& c) {
  MPoly x = MPoly::variable(3, 0), y = MPoly::variable(3, 1), z = MPoly::variable(3, 2);
  std::vector<MPoly> vals{x * a + y * b + z * c, x, y, z};
  return generate_R(3).poly.substitute(vals, MPoly::constant(3, 1));
}

MPoly expand_S_symbolic() {
  auto v = [](int i) { return MPoly::variable(6, i); };
  std::vector<MPoly> vals{v(3) * v(0) + v(4) * v(1) + v(5) * v(2), v(0), v(1), v(2)};
  return generate_R(3).poly.substitute(vals, MPoly::constant(6, 1));
}

}  // namespace pcurves
