#include "pcurves/arrangement/pencil.hpp"
#include "pcurves/borel/borel.hpp"

namespace pcurves {

namespace {

ConditionResult as_condition(const ObstructionItem& it, const std::string& key) {
  return {key, it.verdict, it.title + (it.detail.empty() ? "" : ": " + it.detail), it.points, it.lines};
}

Vec3 diagonal(const HomPoly& q) {
  if (q.degree() != 2) throw Error(ErrorCode::NotDiagonal, "expected a x^2 + b y^2 + c z^2");
  Vec3 d;
  for (int i = 0; i < 3; ++i) {
    std::array<int, 3> m{0, 0, 0};
    m[i] = 2;
    d[i] = q.coeff(m);
  }
  if (q != linear_form({1, 0, 0}).pow(2) * d[0] + linear_form({0, 1, 0}).pow(2) * d[1] + linear_form({0, 0, 1}).pow(2) * d[2])
    throw Error(ErrorCode::NotDiagonal, "mixed terms present");
  return d;
}

}  // namespace

const ConditionResult* FermatReport::find(const std::string& key) const {
  for (const auto& c : items)
    if (c.key == key) return &c;
  return nullptr;
}

FermatReport fermat_check(const HomPoly& q1, const HomPoly& q2, const HomPoly& q3) {
  Mat3 rows{diagonal(q1), diagonal(q2), diagonal(q3)};
  FermatReport rep;
  Rational d = det(rows);
  rep.items.push_back({"independent", d != 0 ? Verdict::pass : Verdict::fail, "det of coefficient rows = " + to_string(d), {}, {}});

  std::string singular;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i)
      if (rows[j][i] == 0) singular += (singular.empty() ? "" : ", ") + std::string("Q") + std::to_string(j + 1);
  rep.items.push_back({"smooth", singular.empty() ? Verdict::pass : Verdict::fail,
                       singular.empty() ? "every coefficient nonzero" : "zero coefficient in " + singular, {}, {}});

  try {
    ObstructionReport obs = contact_obstruction_check(Configuration::make({q1, q2, q3}, {2, 2, 2}));
    rep.items.push_back(as_condition(*obs.find("triple"), "prop.1"));
    rep.items.push_back(as_condition(*obs.find("tangent_through"), "prop.2"));
    rep.items.push_back(as_condition(*obs.find("e"), "prop.3"));
  } catch (const Error& e) {
    for (const char* k : {"prop.1", "prop.2", "prop.3"}) rep.items.push_back({k, Verdict::undecided, e.what(), {}, {}});
  }

  try {
    rep.squares = square_combination(q1, q2, q3);
  } catch (const Error& e) {
    rep.notes.push_back(std::string("square combinations: ") + e.what());
  }
  return rep;
}

bool ExampleReport::all_pass() const {
  if (!square_exact || !square_found || !b4_found) return false;
  return std::all_of(items.begin(), items.end(), [](const ConditionResult& c) { return c.verdict == Verdict::pass; });
}

ExampleReport example_verify() {
  const Vec3 c{1, 0, 0};
  const std::array<Vec3, 2> a{Vec3{0, 1, 0}, Vec3{0, 0, 1}};
  const std::array<Vec3, 2> b{Vec3{1, 1, Rational(1, 25)}, Vec3{50, -10, 9}};
  ExampleReport rep;
  rep.quadrics = b4_quadrics(c, a, b);
  rep.square_coeffs = {225, 100, 4};
  rep.square_root = linear_form({15, 10, 2});
  HomPoly sum = rep.quadrics[0] * rep.square_coeffs[0] + rep.quadrics[1] * rep.square_coeffs[1] + rep.quadrics[2] * rep.square_coeffs[2];
  rep.square_exact = sum == rep.square_root * rep.square_root;

  for (const auto& sc : square_combination(rep.quadrics[0], rep.quadrics[1], rep.quadrics[2]))
    if (sc.exact && sc.a == std::vector<Rational>{225, 100, 4} && sc.root.radicand * sc.root.linear.pow(2) == sum) rep.square_found = true;

  const ProjVec target = make_point(Vec3{15, 10, 2});
  for (const auto& s : b4_solve(c, a, b).solutions)
    if (same(s.point, target) == Zero3::zero && s.square == Tri::yes) rep.b4_found = true;

  ObstructionReport obs = contact_obstruction_check(Configuration::make({z(0), rep.quadrics[1], rep.quadrics[2]}, {1, 2, 2}));
  const std::array<std::pair<const char*, const char*>, 5> keys{{{"triple", "1)"}, {"e", "2)"}, {"tangent_through", "3)"}, {"g", "4)"}, {"f", "5)"}}};
  for (const auto& [src, dst] : keys) rep.items.push_back(as_condition(*obs.find(src), dst));
  return rep;
}

}  // namespace pcurves
