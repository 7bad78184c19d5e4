#pragma once

#include <array>
#include <string>
#include <vector>

#include "pcurves/arrangement/genericity.hpp"
#include "pcurves/arrangement/linalg.hpp"

namespace pcurves {

/// Coefficient vector of a quadric over the monomials
/// z0^2, z0z1, z0z2, z1^2, z1z2, z2^2.
template <typename F>
std::vector<F> quadric_coeffs(const BasicHomPoly<F>& q) {
  static const Exponent mons[6] = {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  std::vector<F> out;
  for (const auto& e : mons) out.push_back(q.coeff(e));
  return out;
}

template <typename F>
struct PencilCoeffs {
  F a, b;
};

/// Exact (a, b) with l1 * l2 = a q1 + b q2. Throws NotInPencil, WrongDegree,
/// InvalidArgument (q1, q2 dependent).
template <typename F>
PencilCoeffs<F> pencil_membership(const BasicHomPoly<F>& l1, const BasicHomPoly<F>& l2, const BasicHomPoly<F>& q1,
                                  const BasicHomPoly<F>& q2) {
  if (l1.degree() != 1 || l2.degree() != 1 || q1.degree() != 2 || q2.degree() != 2)
    throw Error(ErrorCode::WrongDegree, "pencil_membership needs two lines and two quadrics");
  auto c1 = quadric_coeffs(q1), c2 = quadric_coeffs(q2), rhs = quadric_coeffs(l1 * l2);
  Matrix<F> a(6);
  for (int i = 0; i < 6; ++i) a[i] = {c1[i], c2[i]};
  if (rank_of(a) < 2) throw Error(ErrorCode::InvalidArgument, "q1 and q2 are linearly dependent");
  auto x = solve_linear(a, rhs);
  if (!x) throw Error(ErrorCode::NotInPencil, "l1*l2 is not in the pencil of q1, q2");
  return {(*x)[0], (*x)[1]};
}

/// Member [a:b] of a pencil with rank(a M1 + b M2) = 1, so that
/// a q1 + b q2 = radicand * linear^2.
struct Rank1Member {
  bool exact = true;
  /// Exact members: primitive integers with radicand > 0.
  Rational a, b;
  SquareRoot root;
  /// Numeric view, always filled; b = 1 for inexact members.
  CBall a_num, b_num;
  CBall radicand_num;
  BallVec linear_num;
};

/// All rank-one members, from the common roots of the 2x2 minors of
/// a M1 + b M2. Throws IdenticallyDegenerate when every member has rank <= 1.
std::vector<Rank1Member> pencil_rank1_members(const HomPoly& q1, const HomPoly& q2);

enum class ContactType { four_simple, two_tangential, one_point, other };
const char* contact_name(ContactType c);
ContactType contact_classification(const HomPoly& q1, const HomPoly& q2);

/// z -> [p_1^{a_1} : ... : p_k^{a_k}].
struct MorphismDescriptor {
  std::vector<HomPoly> components;
  int degree = 0;
  bool is_morphism = false;
  /// Common zeros of the p_i (empty for a morphism).
  std::vector<ProjVec> base_points;
  bool base_curve = false;
};

/// Powers making the degrees equal: a_i = lcm(d) / d_i.
std::vector<int> lcm_powers(const std::vector<int>& degrees);
/// Throws DegreeMismatch when the powered degrees differ.
MorphismDescriptor composite_morphism(const std::vector<HomPoly>& p, const std::vector<int>& powers);

struct Cor31Entry {
  int component = 0;
  int distinct_points = 0;
  Verdict verdict = Verdict::skipped;
};
/// Distinct points of each D_i on the union of the others; pass iff >= 3.
std::vector<Cor31Entry> cor31_hypothesis_check(const Configuration& cfg);

struct ObstructionItem {
  int item = 0;
  std::string key;
  std::string title;
  Verdict verdict = Verdict::skipped;
  std::string detail;
  std::vector<ProjVec> points;
  std::vector<ProjVec> lines;
  /// Candidate obstructing quadrics (exact case of the span test).
  std::vector<GaussianHomPoly> witnesses;
};

struct ObstructionReport {
  std::vector<ObstructionItem> items;
  const ObstructionItem* find(const std::string& key) const;
  bool all_pass() const;
};

/// Items for a line and two quadrics (family (1,2,2)) or three quadrics:
/// "triple" (no three curves through a point), "e" (no tangency),
/// "tangent_through" (a tangent to a quadric at an intersection point
/// contains no other intersection point), "g" and "f" (line case only).
/// Throws UnsupportedFamily.
ObstructionReport contact_obstruction_check(const Configuration& cfg);

}  // namespace pcurves
