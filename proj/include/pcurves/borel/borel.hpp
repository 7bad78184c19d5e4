#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pcurves/arrangement/genericity.hpp"
#include "pcurves/borel/mpoly.hpp"

namespace pcurves {

/// R_j(y_0..y_j), with R_j(x_0^2, ..., x_j^2) the product of the 2^j sign
/// combinations x_0 +- x_1 +- ... +- x_j.
struct SignProductPoly {
  int j = 0;
  MPoly poly;
};

/// 1 <= j <= 4, otherwise InvalidArgument.
SignProductPoly generate_R(int j);
/// The literal product over sign vectors, in x_0..x_j.
MPoly sign_product(int j);

/// S(x,y,z) = R_3(a x + b y + c z, x, y, z).
MPoly expand_S(const Rational& a, const Rational& b, const Rational& c);
/// Same with a, b, c symbolic: variables (x, y, z, a, b, c).
MPoly expand_S_symbolic();

/// sum_j a_j Q_j = radicand * linear^2.
struct SquareCombination {
  bool exact = true;
  /// Exact: primitive integers, signed so that radicand > 0.
  std::vector<Rational> a;
  SquareRoot root;
  std::vector<CBall> a_num;
  CBall radicand_num;
  BallVec linear_num;
  int nonzero_count = 0;
};

/// All [a1:a2:a3] with rank(sum a_j M_j) = 1. Throws WrongDegree,
/// InfinitelyManySolutions (a curve of rank-one members), NoSolution.
std::vector<SquareCombination> square_combination(const HomPoly& q1, const HomPoly& q2, const HomPoly& q3);

/// The three quadrics Q0 = l^2, Q1, Q2 from (c, a, b).
std::array<HomPoly, 3> b4_quadrics(const Vec3& c, const std::array<Vec3, 2>& a, const std::array<Vec3, 2>& b);

struct B4Solution {
  ProjVec point;  ///< [kappa:lambda:mu]
  bool zero_coordinate = false;
  /// (kappa^2, lambda^2, mu^2) adj(A) as coefficients of (Q0, Q1, Q2).
  std::optional<SquareCombination> combination;
  /// The combination has rank one (exact, or certified on balls).
  Tri square = Tri::unknown;
};

struct B4Result {
  Mat3 A, B, adjA;
  Rational detA;
  std::array<HomPoly, 3> quadrics;
  /// E_k(kappa, lambda, mu) in the variables z0, z1, z2.
  std::array<HomPoly, 3> equations;
  std::vector<B4Solution> solutions;
};

/// Solves (kappa^2, lambda^2, mu^2) adj(A) B = 2 det(A) (kappa lambda, kappa mu, lambda mu).
/// Throws SingularA, InfinitelyManySolutions.
B4Result b4_solve(const Vec3& c, const std::array<Vec3, 2>& a, const std::array<Vec3, 2>& b);

enum class DegeneracyKind { r3, r2, collapse };
const char* degeneracy_name(DegeneracyKind k);

struct DegeneracyCurve {
  HomPoly poly;
  DegeneracyKind kind = DegeneracyKind::r3;
  int z_degree = 0;  ///< degree in z0, z1, z2 (<= 8)
  int q_degree = 0;  ///< degree as a polynomial in Q1, Q2, Q3
  bool identically_zero = false;
  std::array<Rational, 4> alphas;
  std::array<Rational, 3> a;
  std::string detail;
};

/// R_3(alpha0^2 (a1Q1+a2Q2+a3Q3), alpha1^2 Q1, alpha2^2 Q2, alpha3^2 Q3); with
/// exactly one alpha zero, R_2 of the other three; with two or more zero, the
/// quadric relation they force. Throws AllAlphaZero, InvalidArgument (fewer
/// than two a_j nonzero).
DegeneracyCurve degeneracy_curve(const std::array<Rational, 4>& alphas, const std::array<Rational, 3>& a,
                                 const std::array<HomPoly, 3>& quadrics);

/// Q^k = alpha Q^l along the curve.
struct MonomialRelation {
  std::array<int, 3> k{};
  std::array<int, 3> l{};
  Rational alpha = 1;
};

enum class ReductionCase { case1, case2, inconclusive };
const char* reduction_name(ReductionCase c);

/// Q_u^r = gamma Q_v^r, so that the image lies in sigma Q_u - tau Q_v with
/// tau^r = gamma sigma^r (indices 0-based).
struct ReductionConclusion {
  ReductionCase kind = ReductionCase::inconclusive;
  int u = -1, v = -1;
  int r = 0;
  Rational gamma = 0;
  /// Relations used.
  std::vector<int> sources;
  std::string detail;
};

/// One difference vector is a rational multiple of the other.
bool rational_multiple(const std::array<int, 3>& d1, const std::array<int, 3>& d2);

/// Throws MalformedRelation (negative exponents, unequal sums, alpha = 0).
ReductionConclusion monomial_equivalence_reduce(const std::vector<MonomialRelation>& relations);

struct FermatReport {
  std::vector<ConditionResult> items;
  std::vector<SquareCombination> squares;
  std::vector<std::string> notes;
  const ConditionResult* find(const std::string& key) const;
};

/// Diagonal quadrics a x^2 + b y^2 + c z^2. Items: "independent", "smooth",
/// "prop.1" (no triple point), "prop.2" (tangent through), "prop.3" (no
/// tangency). Throws NotDiagonal.
FermatReport fermat_check(const HomPoly& q1, const HomPoly& q2, const HomPoly& q3);

struct ExampleReport {
  std::array<HomPoly, 3> quadrics;
  std::array<Rational, 3> square_coeffs;
  HomPoly square_root;
  bool square_exact = false;
  bool square_found = false;
  bool b4_found = false;
  /// Keys "1)".."5)".
  std::vector<ConditionResult> items;
  bool all_pass() const;
};

/// The worked (1,2,2) example: Q0 = z0^2 and two quadrics.
ExampleReport example_verify();

}  // namespace pcurves
