#include <numeric>

#include "pcurves/borel/borel.hpp"

namespace pcurves {

const char* degeneracy_name(DegeneracyKind k) {
  switch (k) {
    case DegeneracyKind::r3: return "R3";
    case DegeneracyKind::r2: return "R2";
    case DegeneracyKind::collapse: return "collapse";
  }
  return "?";
}

DegeneracyCurve degeneracy_curve(const std::array<Rational, 4>& alphas, const std::array<Rational, 3>& a,
                                 const std::array<HomPoly, 3>& quadrics) {
  if (std::all_of(alphas.begin(), alphas.end(), [](const Rational& x) { return x == 0; }))
    throw Error(ErrorCode::AllAlphaZero, "all alpha_j vanish");
  if (std::count_if(a.begin(), a.end(), [](const Rational& x) { return x != 0; }) < 2)
    throw Error(ErrorCode::InvalidArgument, "at least two a_j must be nonzero");
  for (const auto& q : quadrics)
    if (q.degree() != 2) throw Error(ErrorCode::WrongDegree, "degeneracy_curve needs quadrics");

  DegeneracyCurve out;
  out.alphas = alphas;
  out.a = a;
  std::array<HomPoly, 4> base{quadrics[0] * a[0] + quadrics[1] * a[1] + quadrics[2] * a[2], quadrics[0], quadrics[1], quadrics[2]};
  std::vector<HomPoly> y;
  std::vector<int> live;
  for (int j = 0; j < 4; ++j)
    if (alphas[j] != 0) {
      y.push_back(base[j] * (alphas[j] * alphas[j]));
      live.push_back(j);
    }
  const HomPoly one = HomPoly::constant(1);
  if (live.size() == 4) {
    out.kind = DegeneracyKind::r3;
    out.q_degree = 4;
    out.poly = generate_R(3).poly.substitute(y, one);
  } else if (live.size() == 3) {
    out.kind = DegeneracyKind::r2;
    out.q_degree = 2;
    out.poly = generate_R(2).poly.substitute(y, one);
    for (int j = 0; j < 4; ++j)
      if (alphas[j] == 0) out.detail = "alpha_" + std::to_string(j) + " = 0; R_2 of the remaining terms";
  } else if (live.size() == 2) {
    out.kind = DegeneracyKind::collapse;
    out.q_degree = 1;
    out.poly = y[0] - y[1];
    out.detail = "alpha_" + std::to_string(live[0]) + " q_" + std::to_string(live[0]) + " = -alpha_" + std::to_string(live[1]) + " q_" +
                 std::to_string(live[1]) + "; squaring gives a member of a pencil";
  } else {
    out.kind = DegeneracyKind::collapse;
    out.q_degree = 1;
    out.poly = y[0];
    out.detail = "only alpha_" + std::to_string(live[0]) + " is nonzero, so q_" + std::to_string(live[0]) + " vanishes on the curve";
  }
  out.identically_zero = out.poly.is_zero();
  out.z_degree = out.poly.degree();
  return out;
}

const char* reduction_name(ReductionCase c) {
  switch (c) {
    case ReductionCase::case1: return "case1";
    case ReductionCase::case2: return "case2";
    case ReductionCase::inconclusive: return "inconclusive";
  }
  return "?";
}

bool rational_multiple(const std::array<int, 3>& d1, const std::array<int, 3>& d2) {
  return d1[0] * d2[1] == d1[1] * d2[0] && d1[0] * d2[2] == d1[2] * d2[0] && d1[1] * d2[2] == d1[2] * d2[1];
}

namespace {

Rational rpow(const Rational& x, int n) {
  Rational r = 1;
  for (int i = 0; i < std::abs(n); ++i) r *= x;
  return n < 0 ? Rational(1) / r : r;
}

std::array<int, 3> diff(const MonomialRelation& r) { return {r.k[0] - r.l[0], r.k[1] - r.l[1], r.k[2] - r.l[2]}; }

// Q_u^e Q_v^{-e} = g, oriented so that r > 0.
void orient(ReductionConclusion& c, int u, int v, int e, const Rational& g) {
  if (e > 0) {
    c.u = u;
    c.v = v;
    c.r = e;
    c.gamma = g;
  } else {
    c.u = v;
    c.v = u;
    c.r = -e;
    c.gamma = g;
  }
  c.gamma.canonicalize();
}

}  // namespace

ReductionConclusion monomial_equivalence_reduce(const std::vector<MonomialRelation>& relations) {
  for (std::size_t i = 0; i < relations.size(); ++i) {
    const auto& r = relations[i];
    bool neg = std::any_of(r.k.begin(), r.k.end(), [](int x) { return x < 0; }) || std::any_of(r.l.begin(), r.l.end(), [](int x) { return x < 0; });
    int sk = r.k[0] + r.k[1] + r.k[2], sl = r.l[0] + r.l[1] + r.l[2];
    if (neg || sk != sl || r.alpha == 0)
      throw Error(ErrorCode::MalformedRelation, "relation " + std::to_string(i + 1) + " needs nonnegative exponents, equal sums and alpha != 0");
  }
  ReductionConclusion out;
  for (std::size_t i = 0; i < relations.size(); ++i) {
    const auto& r = relations[i];
    if (r.k == r.l) continue;
    for (int j = 0; j < 3; ++j) {
      if (r.k[j] != r.l[j]) continue;
      int u = (j + 1) % 3, v = (j + 2) % 3;
      if (u > v) std::swap(u, v);
      out.kind = ReductionCase::case1;
      out.sources = {static_cast<int>(i)};
      orient(out, u, v, r.k[u] - r.l[u], r.alpha);
      out.detail = "exponent of Q" + std::to_string(j + 1) + " matches; Q" + std::to_string(out.u + 1) + "^" + std::to_string(out.r) +
                   " = gamma Q" + std::to_string(out.v + 1) + "^" + std::to_string(out.r);
      return out;
    }
  }
  for (std::size_t p = 0; p < relations.size(); ++p)
    for (std::size_t q = p + 1; q < relations.size(); ++q) {
      auto d1 = diff(relations[p]), d2 = diff(relations[q]);
      if (rational_multiple(d1, d2)) continue;
      int i = 0;
      while (d1[i] == 0 && d2[i] == 0) ++i;
      std::array<int, 3> e;
      for (int k = 0; k < 3; ++k) e[k] = d2[i] * d1[k] - d1[i] * d2[k];
      int u = (i + 1) % 3, v = (i + 2) % 3;
      if (u > v) std::swap(u, v);
      Rational g = rpow(relations[p].alpha, d2[i]) * rpow(relations[q].alpha, -d1[i]);
      out.kind = ReductionCase::case2;
      out.sources = {static_cast<int>(p), static_cast<int>(q)};
      orient(out, u, v, e[u], g);
      out.detail = "difference vectors independent; eliminating Q" + std::to_string(i + 1) + " gives Q" + std::to_string(out.u + 1) + "^" +
                   std::to_string(out.r) + " = gamma Q" + std::to_string(out.v + 1) + "^" + std::to_string(out.r);
      return out;
    }
  out.detail = "no matching exponent and all difference vectors proportional";
  return out;
}

}  // namespace pcurves
