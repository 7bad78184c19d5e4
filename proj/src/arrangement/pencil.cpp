#include "pcurves/arrangement/pencil.hpp"

#include <algorithm>
#include <numeric>

#include "pcurves/poly/roots.hpp"

namespace pcurves {

namespace {

using UniMat = std::array<std::array<UniPoly, 3>, 3>;

UniMat pencil_matrix(const Mat3& m1, const Mat3& m2) {
  UniMat out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = UniPoly({m2[i][j], m1[i][j]});
  return out;
}

std::pair<Rational, Rational> primitive_pair(const Rational& a, const Rational& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  mpz_class x = Rational(a * l).get_num(), y = Rational(b * l).get_num(), g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  if (g == 0) return {a, b};
  return {Rational(mpz_class(x / g)), Rational(mpz_class(y / g))};
}

BallVec linear_balls(const HomPoly& l) {
  auto c = linear_coeffs(l);
  return {to_ball(c[0]), to_ball(c[1]), to_ball(c[2])};
}

Rank1Member exact_member(const HomPoly& q1, const HomPoly& q2, Rational a, Rational b) {
  std::tie(a, b) = primitive_pair(a, b);
  auto root = square_root(q1 * a + q2 * b);
  if (root->radicand < 0) {
    a = -a;
    b = -b;
    root->radicand = -root->radicand;
  }
  Rank1Member m;
  m.a = a;
  m.b = b;
  m.root = *root;
  m.a_num = to_ball(a);
  m.b_num = to_ball(b);
  m.radicand_num = to_ball(root->radicand);
  m.linear_num = linear_balls(root->linear);
  return m;
}

}  // namespace

std::vector<Rank1Member> pencil_rank1_members(const HomPoly& q1, const HomPoly& q2) {
  if (q1.degree() != 2 || q2.degree() != 2) throw Error(ErrorCode::WrongDegree, "pencil_rank1_members needs two quadrics");
  QuadricForm f1 = quadric_form(q1), f2 = quadric_form(q2);
  UniMat m = pencil_matrix(f1.matrix, f2.matrix);
  UniPoly g;
  for (int r1 = 0; r1 < 3; ++r1)
    for (int r2 = r1 + 1; r2 < 3; ++r2)
      for (int c1 = 0; c1 < 3; ++c1)
        for (int c2 = c1 + 1; c2 < 3; ++c2) g = gcd(g, m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]);
  if (g.is_zero()) throw Error(ErrorCode::IdenticallyDegenerate, "every member of the pencil has rank at most one");

  std::vector<Rank1Member> out;
  if (f1.rank == 1) out.push_back(exact_member(q1, q2, 1, 0));
  if (g.degree() < 1) return out;
  for (const auto& r : roots_with_multiplicity(g)) {
    if (r.exact) {
      Mat3 mt = *r.exact * f1.matrix + f2.matrix;
      if (rank(mt) != 1) continue;
      out.push_back(exact_member(q1, q2, *r.exact, 1));
      continue;
    }
    std::array<std::array<CBall, 3>, 3> mt;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) mt[i][j] = r.z * to_ball(f1.matrix[i][j]) + to_ball(f2.matrix[i][j]);
    int piv = 0;
    for (int i = 1; i < 3; ++i)
      if (abs(mt[i][i].mid) > abs(mt[piv][piv].mid)) piv = i;
    Rank1Member mem;
    mem.exact = false;
    mem.a_num = r.z;
    mem.b_num = CBall::exact(1);
    mem.radicand_num = CBall::exact(1) / mt[piv][piv];
    mem.linear_num = {mt[piv][0], mt[piv][1], mt[piv][2]};
    out.push_back(mem);
  }
  return out;
}

const char* contact_name(ContactType c) {
  switch (c) {
    case ContactType::four_simple: return "four-simple";
    case ContactType::two_tangential: return "two-tangential";
    case ContactType::one_point: return "one-point";
    case ContactType::other: return "other";
  }
  return "?";
}

ContactType contact_classification(const HomPoly& q1, const HomPoly& q2) {
  if (q1.degree() != 2 || q2.degree() != 2) throw Error(ErrorCode::WrongDegree, "contact_classification needs two quadrics");
  std::vector<int> ms;
  for (const auto& r : intersection_points(q1, q2)) ms.push_back(r.multiplicity);
  std::sort(ms.begin(), ms.end());
  if (ms == std::vector<int>{1, 1, 1, 1}) return ContactType::four_simple;
  if (ms == std::vector<int>{2, 2}) return ContactType::two_tangential;
  if (ms == std::vector<int>{4}) return ContactType::one_point;
  return ContactType::other;
}

std::vector<int> lcm_powers(const std::vector<int>& degrees) {
  int l = 1;
  for (int d : degrees) {
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "degrees must be positive");
    l = std::lcm(l, d);
  }
  std::vector<int> out;
  for (int d : degrees) out.push_back(l / d);
  return out;
}

MorphismDescriptor composite_morphism(const std::vector<HomPoly>& p, const std::vector<int>& powers) {
  if (p.size() != powers.size() || p.empty()) throw Error(ErrorCode::InvalidArgument, "one power per component is required");
  MorphismDescriptor md;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) throw Error(ErrorCode::ZeroPolynomial, "component " + std::to_string(i + 1) + " is zero");
    if (powers[i] < 1) throw Error(ErrorCode::InvalidArgument, "powers must be positive");
    int d = p[i].degree() * powers[i];
    if (i > 0 && d != md.degree)
      throw Error(ErrorCode::DegreeMismatch, "component degrees " + std::to_string(md.degree) + " and " + std::to_string(d) + " differ");
    md.degree = d;
  }
  for (std::size_t i = 0; i < p.size(); ++i) md.components.push_back(p[i].pow(static_cast<unsigned>(powers[i])));
  try {
    md.base_points = p.size() == 1 ? std::vector<ProjVec>{} : common_zeros(p);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InfinitelyManySolutions) throw;
    md.base_curve = true;
  }
  if (p.size() == 1) md.base_curve = p[0].degree() > 0;
  md.is_morphism = !md.base_curve && md.base_points.empty();
  return md;
}

std::vector<Cor31Entry> cor31_hypothesis_check(const Configuration& cfg) {
  auto pairs = all_intersections(cfg);
  std::vector<std::vector<ProjVec>> pts(cfg.size());
  for (const auto& pi : pairs) {
    if (pi.common_component)
      throw Error(ErrorCode::CommonComponent, "Gamma" + std::to_string(pi.i + 1) + " and Gamma" + std::to_string(pi.j + 1) + " share a component");
    for (const auto& r : pi.records)
      for (int c : {pi.i, pi.j}) {
        bool dup = std::any_of(pts[c].begin(), pts[c].end(), [&](const ProjVec& q) { return same(q, r.point) == Zero3::zero; });
        if (!dup) pts[c].push_back(r.point);
      }
  }
  std::vector<Cor31Entry> out;
  for (std::size_t c = 0; c < cfg.size(); ++c) {
    Cor31Entry e;
    e.component = static_cast<int>(c);
    e.distinct_points = static_cast<int>(pts[c].size());
    e.verdict = e.distinct_points >= 3 ? Verdict::pass : Verdict::fail;
    out.push_back(e);
  }
  return out;
}

const ObstructionItem* ObstructionReport::find(const std::string& key) const {
  for (const auto& it : items)
    if (it.key == key) return &it;
  return nullptr;
}

bool ObstructionReport::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const ObstructionItem& i) { return i.verdict == Verdict::pass || i.verdict == Verdict::skipped; });
}

namespace {

struct Flag {
  bool fail = false, unknown = false;
  void add(Zero3 hit) {
    if (hit == Zero3::zero) fail = true;
    if (hit == Zero3::unknown) unknown = true;
  }
  Verdict verdict() const { return fail ? Verdict::fail : unknown ? Verdict::undecided : Verdict::pass; }
};

std::string name(int i) { return "Gamma" + std::to_string(i + 1); }

const std::vector<IntersectionRecord>& records_of(const std::vector<PairIntersections>& pairs, int a, int b) {
  for (const auto& p : pairs)
    if ((p.i == a && p.j == b) || (p.i == b && p.j == a)) return p.records;
  static const std::vector<IntersectionRecord> none;
  return none;
}

std::vector<ProjVec> distinct_points(const std::vector<PairIntersections>& pairs) {
  std::vector<ProjVec> out;
  for (const auto& pi : pairs)
    for (const auto& r : pi.records)
      if (std::none_of(out.begin(), out.end(), [&](const ProjVec& q) { return same(q, r.point) == Zero3::zero; })) out.push_back(r.point);
  return out;
}

ObstructionItem item_triple(const Configuration& cfg, const std::vector<PairIntersections>& pairs) {
  ObstructionItem it{1, "triple", "no three curves through one point", Verdict::pass, "", {}, {}, {}};
  Flag f;
  for (const auto& pi : pairs)
    for (const auto& r : pi.records)
      for (int k = 0; k < static_cast<int>(cfg.size()); ++k) {
        if (k == pi.i || k == pi.j || k < pi.j) continue;
        Zero3 z = vanishes_at(cfg.components[k], r.point);
        f.add(z);
        if (z == Zero3::zero) it.points.push_back(r.point);
      }
  it.verdict = f.verdict();
  return it;
}

ObstructionItem item_tangency(const std::vector<PairIntersections>& pairs) {
  ObstructionItem it{2, "e", "no two curves tangent", Verdict::pass, "", {}, {}, {}};
  bool fail = false;
  for (const auto& pi : pairs) {
    if (pi.common_component) {
      fail = true;
      it.detail += name(pi.i) + " and " + name(pi.j) + " share a component; ";
      continue;
    }
    for (const auto& r : pi.records)
      if (r.multiplicity > 1) {
        fail = true;
        it.points.push_back(r.point);
        it.detail += name(pi.i) + " and " + name(pi.j) + " meet with multiplicity " + std::to_string(r.multiplicity) + "; ";
      }
  }
  it.verdict = fail ? Verdict::fail : Verdict::pass;
  return it;
}

ObstructionItem item_tangent_through(const Configuration& cfg, const std::vector<PairIntersections>& pairs) {
  ObstructionItem it{3, "tangent_through", "no tangent at an intersection point contains another", Verdict::pass, "", {}, {}, {}};
  Flag f;
  auto all = distinct_points(pairs);
  for (int q = 0; q < static_cast<int>(cfg.size()); ++q) {
    if (cfg.family[q] != 2) continue;
    for (const auto& pi : pairs) {
      if (pi.i != q && pi.j != q) continue;
      for (const auto& r : pi.records) {
        ProjVec t;
        try {
          t = tangent_line(cfg.components[q], r.point);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::SingularPoint) throw;
          continue;
        }
        for (const auto& x : all) {
          if (same(x, r.point) != Zero3::nonzero) continue;
          Zero3 z = incident(x, t);
          f.add(z);
          if (z == Zero3::zero) {
            it.points.push_back(r.point);
            it.points.push_back(x);
            it.lines.push_back(t);
          }
        }
      }
    }
  }
  it.verdict = f.verdict();
  return it;
}

ObstructionItem item_g(const Configuration& cfg, const std::vector<PairIntersections>& pairs, int line, int qa, int qb) {
  ObstructionItem it{4, "g", "no tangent at a point on the line is tangent to the other quadric", Verdict::pass, "", {}, {}, {}};
  Flag f;
  for (auto [q, other] : {std::pair{qa, qb}, std::pair{qb, qa}}) {
    HomPoly dual = dual_conic(cfg.components[other]);
    for (const auto& r : records_of(pairs, line, q)) {
      ProjVec t = tangent_line(cfg.components[q], r.point);
      Zero3 z = vanishes_at(dual, t);
      f.add(z);
      if (z == Zero3::zero) {
        it.points.push_back(r.point);
        it.lines.push_back(t);
      }
    }
  }
  it.verdict = f.verdict();
  return it;
}

GaussianHomPoly gaussian_linear(const GaussVec& c) {
  GaussianHomPoly l;
  for (int k = 0; k < 3; ++k) l = l + GaussianHomPoly::variable(k) * c[k];
  return l;
}

std::array<CBall, 6> square_coeffs(const BallVec& l) {
  CBall two = CBall::exact(2);
  return {l[0] * l[0], two * l[0] * l[1], two * l[0] * l[2], l[1] * l[1], two * l[1] * l[2], l[2] * l[2]};
}

CBall det_ball(std::vector<std::vector<CBall>> m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  CBall acc = CBall::exact(0);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<CBall>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<CBall> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    CBall term = m[0][c] * det_ball(minor);
    acc = c % 2 ? acc - term : acc + term;
  }
  return acc;
}

// Rank of the 4x6 span matrix is below 4: yes / no / unknown.
Tri span_deficient(const std::array<std::array<CBall, 6>, 4>& rows) {
  bool unknown = false;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c)
        for (int d = c + 1; d < 6; ++d) {
          std::vector<std::vector<CBall>> m;
          for (const auto& r : rows) m.push_back({r[a], r[b], r[c], r[d]});
          Zero3 z = decide_zero(det_ball(m));
          if (z == Zero3::nonzero) return Tri::no;
          if (z == Zero3::unknown) unknown = true;
        }
  return unknown ? Tri::unknown : Tri::yes;
}

ObstructionItem item_f(const Configuration& cfg, const std::vector<PairIntersections>& pairs, int line, int qa, int qb) {
  ObstructionItem it{5, "f", "no quadric meets each of the two quadrics in one point of the line", Verdict::pass, "", {}, {}, {}};
  Flag f;
  const HomPoly& q2 = cfg.components[qa];
  const HomPoly& q3 = cfg.components[qb];
  for (const auto& r2 : records_of(pairs, line, qa))
    for (const auto& r3 : records_of(pairs, line, qb)) {
      ProjVec t2 = tangent_line(q2, r2.point);
      ProjVec t3 = tangent_line(q3, r3.point);
      if (t2.exact && t3.exact) {
        GaussianHomPoly g2 = to_gaussian(q2), g3 = to_gaussian(q3);
        GaussianHomPoly s2 = gaussian_linear(*t2.exact).pow(2), s3 = gaussian_linear(*t3.exact).pow(2);
        std::array<std::vector<GaussRat>, 4> cols{quadric_coeffs(g2), quadric_coeffs(s2), quadric_coeffs(g3), quadric_coeffs(s3)};
        Matrix<GaussRat> a(6, std::vector<GaussRat>(4));
        for (int i = 0; i < 6; ++i)
          for (int j = 0; j < 4; ++j) a[i][j] = cols[j][i];
        auto ker = kernel(a, 4);
        if (ker.empty()) continue;
        f.fail = true;
        const auto& v = ker[0];
        it.witnesses.push_back(g2 * v[0] + s2 * v[1]);
        it.points.push_back(r2.point);
        it.points.push_back(r3.point);
        it.lines.push_back(t2);
        it.lines.push_back(t3);
        continue;
      }
      auto qrow = [](const HomPoly& q) {
        auto c = quadric_coeffs(q);
        std::array<CBall, 6> out;
        for (int i = 0; i < 6; ++i) out[i] = to_ball(c[i]);
        return out;
      };
      Tri d = span_deficient({qrow(q2), square_coeffs(t2.ball), qrow(q3), square_coeffs(t3.ball)});
      f.add(d == Tri::yes ? Zero3::zero : d == Tri::no ? Zero3::nonzero : Zero3::unknown);
      if (d == Tri::yes) {
        it.points.push_back(r2.point);
        it.points.push_back(r3.point);
        it.lines.push_back(t2);
        it.lines.push_back(t3);
      }
    }
  it.verdict = f.verdict();
  if (it.verdict == Verdict::fail) it.detail = "potential obstruction: the tangent pencils share a quadric";
  return it;
}

ObstructionReport obstruction_at_precision(const Configuration& cfg, int line) {
  ObstructionReport rep;
  auto pairs = all_intersections(cfg);
  rep.items.push_back(item_triple(cfg, pairs));
  rep.items.push_back(item_tangency(pairs));
  rep.items.push_back(item_tangent_through(cfg, pairs));
  if (line < 0) {
    rep.items.push_back({4, "g", "applies to a line and two quadrics", Verdict::skipped, "", {}, {}, {}});
    rep.items.push_back({5, "f", "applies to a line and two quadrics", Verdict::skipped, "", {}, {}, {}});
    return rep;
  }
  std::vector<int> qs;
  for (int i = 0; i < 3; ++i)
    if (i != line) qs.push_back(i);
  bool smooth = quadric_form(cfg.components[qs[0]]).det != 0 && quadric_form(cfg.components[qs[1]]).det != 0;
  bool clean = std::none_of(pairs.begin(), pairs.end(), [](const PairIntersections& p) { return p.common_component; });
  if (!smooth || !clean) {
    const char* why = !smooth ? "requires smooth quadrics" : "requires curves without common components";
    rep.items.push_back({4, "g", why, Verdict::skipped, "", {}, {}, {}});
    rep.items.push_back({5, "f", why, Verdict::skipped, "", {}, {}, {}});
    return rep;
  }
  rep.items.push_back(item_g(cfg, pairs, line, qs[0], qs[1]));
  rep.items.push_back(item_f(cfg, pairs, line, qs[0], qs[1]));
  return rep;
}

}  // namespace

ObstructionReport contact_obstruction_check(const Configuration& cfg) {
  std::vector<int> fam = cfg.family;
  std::sort(fam.begin(), fam.end());
  if (fam != std::vector<int>{1, 2, 2} && fam != std::vector<int>{2, 2, 2})
    throw Error(ErrorCode::UnsupportedFamily, "contact_obstruction_check needs family (1,2,2) or (2,2,2)");
  int line = -1;
  for (int i = 0; i < 3; ++i)
    if (cfg.family[i] == 1) line = i;
  for (long prec = working_precision();; prec *= 2) {
    PrecisionScope scope(prec);
    ObstructionReport rep = obstruction_at_precision(cfg, line);
    bool undecided = std::any_of(rep.items.begin(), rep.items.end(), [](const ObstructionItem& i) { return i.verdict == Verdict::undecided; });
    if (!undecided || prec * 2 > precision_cap()) return rep;
  }
}

}  // namespace pcurves
