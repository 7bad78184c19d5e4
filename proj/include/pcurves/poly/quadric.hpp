#pragma once

#include <array>
#include <optional>

#include "pcurves/poly/hompoly.hpp"

namespace pcurves {

using Mat3 = std::array<std::array<Rational, 3>, 3>;
using Vec3 = std::array<Rational, 3>;

Mat3 mat_zero();
Mat3 mat_identity();
Mat3 operator*(const Mat3& a, const Mat3& b);
Mat3 operator+(const Mat3& a, const Mat3& b);
Mat3 operator*(const Rational& s, const Mat3& a);
Vec3 operator*(const Mat3& a, const Vec3& v);
Mat3 transpose(const Mat3& a);
Rational det(const Mat3& a);
/// Classical adjoint: adj(A) * A = det(A) * I.
Mat3 adjugate(const Mat3& a);
int rank(const Mat3& a);
/// Rank of an arbitrary rational matrix.
int rank(std::vector<std::vector<Rational>> m);
/// Basis of the right null space of a rational matrix.
std::vector<std::vector<Rational>> null_space(std::vector<std::vector<Rational>> m, std::size_t cols);

/// Symmetric matrix view of a ternary quadratic form, poly = z^T M z.
struct QuadricForm {
  Mat3 matrix;
  int rank = 0;
  Rational det;
};

QuadricForm quadric_form(const HomPoly& p);
HomPoly poly_from_matrix(const Mat3& m);
/// Quadratic form l^T M l in the coordinates of l (used for duals).
HomPoly dual_conic(const HomPoly& p);

/// p = radicand * linear^2 with linear primitive over Z, first nonzero
/// coefficient positive; radicand folded to 1 when it is a rational square.
struct SquareRoot {
  Rational radicand;
  HomPoly linear;
};

/// Square root of a rank-1 quadric, nullopt otherwise.
std::optional<SquareRoot> square_root(const HomPoly& p);

/// Exact square root of a non-negative rational, if it is a square.
std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace pcurves
