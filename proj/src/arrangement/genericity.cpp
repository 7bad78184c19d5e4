#include "pcurves/arrangement/genericity.hpp"

#include <algorithm>

#include "pcurves/poly/roots.hpp"

namespace pcurves {

namespace {

constexpr int kMaxDegree = 8;

std::string curve_name(int i) { return "Gamma" + std::to_string(i + 1); }

// Running verdict: fail dominates, then undecided.
struct Tally {
  bool fail = false, unknown = false;
  void add(Tri t) {
    if (t == Tri::yes) fail = true;
    if (t == Tri::unknown) unknown = true;
  }
  Verdict verdict() const { return fail ? Verdict::fail : unknown ? Verdict::undecided : Verdict::pass; }
};

Tri as_tri(Zero3 z) { return z == Zero3::zero ? Tri::yes : z == Zero3::nonzero ? Tri::no : Tri::unknown; }

// A point shared by two curves with a common component.
std::optional<ProjVec> common_witness(const HomPoly& p, const HomPoly& q) {
  const std::array<HomPoly, 3> probes{z(2) - z(0) * Rational(3) - z(1) * Rational(5), z(1) - z(0) * Rational(2) + z(2) * Rational(7),
                                      z(0) + z(1) + z(2) * Rational(11)};
  for (const auto& l : probes) {
    try {
      for (const auto& r : intersection_points(p, l))
        if (vanishes_at(q, r.point) == Zero3::zero) return r.point;
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

ConditionResult cond_smooth(const Configuration& cfg, const std::string& key) {
  ConditionResult res{key, Verdict::pass, "", {}, {}};
  Tally t;
  std::vector<std::string> bad;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    const HomPoly& p = cfg.components[i];
    if (p.degree() == 1) continue;
    if (p.degree() == 2) {
      QuadricForm q = quadric_form(p);
      if (q.det != 0) continue;
      t.add(Tri::yes);
      bad.push_back(curve_name(static_cast<int>(i)) + " has rank " + std::to_string(q.rank));
      std::vector<std::vector<Rational>> m;
      for (const auto& row : q.matrix) m.emplace_back(row.begin(), row.end());
      auto ns = null_space(m, 3);
      if (!ns.empty()) res.points.push_back(make_point(Vec3{ns[0][0], ns[0][1], ns[0][2]}));
      continue;
    }
    try {
      auto sing = common_zeros({p.derivative(0), p.derivative(1), p.derivative(2)});
      if (!sing.empty()) {
        t.add(Tri::yes);
        bad.push_back(curve_name(static_cast<int>(i)) + " has " + std::to_string(sing.size()) + " singular point(s)");
        res.points.insert(res.points.end(), sing.begin(), sing.end());
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InfinitelyManySolutions) {
        t.add(Tri::yes);
        bad.push_back(curve_name(static_cast<int>(i)) + " is not reduced");
      } else if (e.code() == ErrorCode::PrecisionExhausted) {
        t.add(Tri::unknown);
      } else {
        throw;
      }
    }
  }
  res.verdict = t.verdict();
  for (const auto& b : bad) res.detail += (res.detail.empty() ? "" : "; ") + b;
  return res;
}

ConditionResult cond_transversal(const Configuration& cfg, const std::vector<PairIntersections>& pairs, const std::string& key) {
  ConditionResult res{key, Verdict::pass, "", {}, {}};
  Tally t;
  auto note = [&](const std::string& s) { res.detail += (res.detail.empty() ? "" : "; ") + s; };
  for (const auto& pi : pairs) {
    std::string pair_name = curve_name(pi.i) + "," + curve_name(pi.j);
    if (pi.common_component) {
      t.add(Tri::yes);
      note(pair_name + " share a component");
      if (auto w = common_witness(cfg.components[pi.i], cfg.components[pi.j])) res.points.push_back(*w);
      continue;
    }
    for (const auto& r : pi.records) {
      if (r.multiplicity > 1) {
        t.add(Tri::yes);
        note(pair_name + " meet with multiplicity " + std::to_string(r.multiplicity));
        res.points.push_back(r.point);
      }
      for (std::size_t k = 0; k < cfg.size(); ++k) {
        if (static_cast<int>(k) == pi.i || static_cast<int>(k) == pi.j) continue;
        // each triple point is reported once, from its lowest pair
        if (static_cast<int>(k) < pi.j) continue;
        Tri on = as_tri(vanishes_at(cfg.components[k], r.point));
        t.add(on);
        if (on == Tri::yes) {
          note(pair_name + "," + curve_name(static_cast<int>(k)) + " pass through one point");
          res.points.push_back(r.point);
        }
      }
    }
  }
  res.verdict = t.verdict();
  return res;
}

ConditionResult cond_common_tangent(const Configuration& cfg, const std::string& key) {
  ConditionResult res{key, Verdict::pass, "reading: the third quadric must not contain both tangency points", {}, {}};
  Tally t;
  int single = 0;
  const int trip[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
  for (const auto& tr : trip) {
    const HomPoly& qj = cfg.components[tr[0]];
    const HomPoly& qk = cfg.components[tr[1]];
    const HomPoly& ql = cfg.components[tr[2]];
    Mat3 aj = adjugate(quadric_form(qj).matrix), ak = adjugate(quadric_form(qk).matrix);
    std::vector<IntersectionRecord> tangents;
    try {
      tangents = intersection_points(dual_conic(qj), dual_conic(qk));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CommonComponent) throw;
      t.add(Tri::yes);
      res.detail += "; " + curve_name(tr[0]) + "," + curve_name(tr[1]) + " have a continuum of common tangents";
      continue;
    }
    for (const auto& rec : tangents) {
      ProjVec line = rec.point;
      ProjVec P = apply_matrix(aj, line);
      ProjVec Q = apply_matrix(ak, line);
      Tri onP = as_tri(vanishes_at(ql, P)), onQ = as_tri(vanishes_at(ql, Q));
      if (onP == Tri::yes && onQ == Tri::yes) {
        t.add(Tri::yes);
        res.lines.push_back(line);
        res.points.push_back(P);
        res.points.push_back(Q);
      } else if (onP == Tri::unknown || onQ == Tri::unknown) {
        t.add(Tri::unknown);
      } else if (onP == Tri::yes || onQ == Tri::yes) {
        ++single;
      }
    }
  }
  if (single > 0) res.detail += "; the stricter reading (neither point) would fail at " + std::to_string(single) + " tangent(s)";
  res.verdict = t.verdict();
  return res;
}

ConditionResult cond_two_tangents(const Configuration& cfg, const std::vector<PairIntersections>& pairs, const std::vector<int>& curves,
                                  const std::vector<int>& lines, const std::string& key) {
  ConditionResult res{key, Verdict::pass, "both assignments of the two lines are checked", {}, {}};
  Tally t;
  auto records = [&](int a, int b) -> const std::vector<IntersectionRecord>& {
    for (const auto& p : pairs)
      if ((p.i == a && p.j == b) || (p.i == b && p.j == a)) return p.records;
    static const std::vector<IntersectionRecord> none;
    return none;
  };
  const HomPoly& p1 = cfg.components[curves[0]];
  const HomPoly& p2 = cfg.components[curves[1]];
  for (int swap = 0; swap < 2; ++swap) {
    int la = lines[swap], lb = lines[1 - swap];
    for (const auto& rp : records(curves[0], la))
      for (const auto& rq : records(curves[1], lb)) {
        auto L = join(rp.point, rq.point);
        if (!L) continue;
        Tri a = meets_only_at(p1, rp.point, rq.point);
        Tri b = meets_only_at(p2, rq.point, rp.point);
        Tri both = (a == Tri::yes && b == Tri::yes) ? Tri::yes : (a == Tri::no || b == Tri::no) ? Tri::no : Tri::unknown;
        t.add(both);
        if (both == Tri::yes) {
          res.lines.push_back(*L);
          res.points.push_back(rp.point);
          res.points.push_back(rq.point);
        }
      }
  }
  res.verdict = t.verdict();
  return res;
}

ConditionResult cond_tangent_through(const Configuration& cfg, const std::vector<PairIntersections>& pairs, int curve,
                                     const std::vector<int>& lines, const std::string& key) {
  ConditionResult res{key, Verdict::pass, "", {}, {}};
  Tally t;
  const HomPoly& p1 = cfg.components[curve];
  for (std::size_t s = 0; s < lines.size(); ++s) {
    int li = lines[s];
    std::vector<int> others;
    for (int l : lines)
      if (l != li) others.push_back(l);
    ProjVec X = *join(line_from_form(cfg.components[others[0]]), line_from_form(cfg.components[others[1]]));
    for (const auto& pi : pairs) {
      if (!((pi.i == curve && pi.j == li) || (pi.i == li && pi.j == curve))) continue;
      for (const auto& r : pi.records) {
        if (same(r.point, X) != Zero3::nonzero) continue;
        Tri m = meets_only_at(p1, r.point, X);
        t.add(m);
        if (m == Tri::yes) {
          res.points.push_back(r.point);
          res.lines.push_back(*join(r.point, X));
        }
      }
    }
  }
  res.verdict = t.verdict();
  return res;
}

ConditionResult skipped(const std::string& key, const std::string& why) { return {key, Verdict::skipped, why, {}, {}}; }

GenericityReport s4_at_precision(const Configuration& cfg) {
  GenericityReport rep;
  const int k = static_cast<int>(cfg.size());
  std::vector<int> lines, curves;
  int total = 0;
  for (int i = 0; i < k; ++i) {
    (cfg.family[i] == 1 ? lines : curves).push_back(i);
    total += cfg.family[i];
  }
  auto pairs = all_intersections(cfg);
  rep.conditions.push_back(cond_smooth(cfg, "s4.1"));
  rep.conditions.push_back(cond_transversal(cfg, pairs, "s4.2"));
  bool base_ok = rep.conditions[0].verdict == Verdict::pass && rep.conditions[1].verdict == Verdict::pass;
  std::vector<int> fam = cfg.family;
  std::sort(fam.begin(), fam.end());
  bool c222 = fam == std::vector<int>{2, 2, 2};
  if (!c222) {
    rep.conditions.push_back(skipped("s4.3", "applies to three quadrics"));
  } else if (rep.conditions[0].verdict != Verdict::pass) {
    rep.conditions.push_back(skipped("s4.3", "requires smooth quadrics"));
  } else {
    rep.conditions.push_back(cond_common_tangent(cfg, "s4.3"));
  }
  if (k == 4 && lines.size() == 2) {
    rep.conditions.push_back(cond_two_tangents(cfg, pairs, curves, lines, "s4.4"));
  } else {
    rep.conditions.push_back(skipped("s4.4", "applies to two curves and two lines"));
  }
  if (k == 4 && lines.size() == 3) {
    rep.conditions.push_back(cond_tangent_through(cfg, pairs, curves[0], lines, "s4.5"));
  } else {
    rep.conditions.push_back(skipped("s4.5", "applies to one curve and three lines"));
  }
  if (!base_ok) rep.notes.push_back("conditions (1)/(2) fail; later verdicts are informational");
  if (!(c222 || (k >= 4 && total >= 5))) rep.notes.push_back("family outside the covered range; only (1) and (2) are meaningful");
  return rep;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::undecided: return "undecided";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

Configuration Configuration::make(std::vector<HomPoly> components, std::vector<int> family) {
  if (components.empty() || components.size() != family.size())
    throw Error(ErrorCode::InvalidArgument, "configuration needs matching components and family");
  for (std::size_t i = 0; i < components.size(); ++i) {
    HomPoly& p = components[i];
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, curve_name(static_cast<int>(i)) + " is zero");
    if (family[i] < 1) throw Error(ErrorCode::InvalidArgument, "declared degrees must be positive");
    if (p.degree() == family[i]) continue;
    if (family[i] == 1 && p.degree() == 2) {
      if (auto r = square_root(p)) {
        p = r->linear;
        continue;
      }
    }
    throw Error(ErrorCode::WrongDegree, curve_name(static_cast<int>(i)) + " has degree " + std::to_string(p.degree()) + ", declared " +
                                            std::to_string(family[i]));
  }
  return Configuration{std::move(components), std::move(family)};
}

const ConditionResult* GenericityReport::find(const std::string& key) const {
  for (const auto& c : conditions)
    if (c.key == key) return &c;
  return nullptr;
}

Verdict GenericityReport::verdict(const std::string& key) const {
  const ConditionResult* c = find(key);
  return c ? c->verdict : Verdict::skipped;
}

bool GenericityReport::all_pass() const {
  return std::none_of(conditions.begin(), conditions.end(),
                      [](const ConditionResult& c) { return c.verdict == Verdict::fail || c.verdict == Verdict::undecided; });
}

bool GenericityReport::any_undecided() const {
  return std::any_of(conditions.begin(), conditions.end(), [](const ConditionResult& c) { return c.verdict == Verdict::undecided; });
}

std::vector<PairIntersections> all_intersections(const Configuration& cfg) {
  std::vector<PairIntersections> out;
  for (int i = 0; i < static_cast<int>(cfg.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(cfg.size()); ++j) {
      PairIntersections pi;
      pi.i = i;
      pi.j = j;
      try {
        pi.records = intersection_points(cfg.components[i], cfg.components[j]);
        for (auto& r : pi.records) r.pair = {i, j};
      } catch (const Error& e) {
        if (e.code() != ErrorCode::CommonComponent) throw;
        pi.common_component = true;
      }
      out.push_back(std::move(pi));
    }
  return out;
}

GenericityReport genericity_check_s4(const Configuration& cfg) {
  if (cfg.size() < 2) throw Error(ErrorCode::UnsupportedFamily, "at least two curves are needed");
  for (int d : cfg.family)
    if (d > kMaxDegree) throw Error(ErrorCode::UnsupportedFamily, "degree " + std::to_string(d) + " exceeds " + std::to_string(kMaxDegree));
  for (long prec = working_precision();; prec *= 2) {
    PrecisionScope scope(prec);
    GenericityReport rep = s4_at_precision(cfg);
    rep.precision_bits = prec;
    if (!rep.any_undecided() || prec * 2 > precision_cap()) return rep;
  }
}

std::string SystemLine::label() const {
  static const char* names[3] = {"L12", "L13", "L23"};
  return std::string(names[group]) + ":A" + std::to_string(a + 1) + "A" + std::to_string(b + 1);
}

std::vector<SystemLine> LineSystem::all() const {
  std::vector<SystemLine> out;
  for (const auto& g : groups) out.insert(out.end(), g.begin(), g.end());
  return out;
}

LineSystem build_line_system(const std::array<std::array<ProjVec, 4>, 3>& points) {
  static const int order[6][2] = {{0, 1}, {2, 3}, {0, 2}, {1, 3}, {0, 3}, {1, 2}};
  LineSystem ls;
  ls.points = points;
  for (int g = 0; g < 3; ++g)
    for (int k = 0; k < 6; ++k) {
      int a = order[k][0], b = order[k][1];
      auto l = join(points[g][a], points[g][b]);
      if (!l) throw Error(ErrorCode::DegenerateIntersection, "points coincide in group " + std::to_string(g));
      ls.groups[g][k] = SystemLine{*l, g, a, b};
    }
  return ls;
}

int distinct_line_count(const LineSystem& ls) {
  auto lines = ls.all();
  int count = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    bool dup = false;
    for (std::size_t j = 0; j < i && !dup; ++j) dup = same(lines[i].line, lines[j].line) != Zero3::nonzero;
    if (!dup) ++count;
  }
  return count;
}

namespace {

ConditionResult cond_line_incidence(const LineSystem& ls, const std::string& key) {
  ConditionResult res{key, Verdict::pass, "", {}, {}};
  Tally t;
  auto lines = ls.all();
  std::vector<ProjVec> pts;
  for (const auto& g : ls.points) pts.insert(pts.end(), g.begin(), g.end());
  auto note = [&](const std::string& s) { res.detail += (res.detail.empty() ? "" : "; ") + s; };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    int through = 0;
    bool unknown = false;
    for (const auto& l : lines) {
      Zero3 z = incident(pts[i], l.line);
      if (z == Zero3::zero) ++through;
      if (z == Zero3::unknown) unknown = true;
    }
    if (unknown) {
      t.add(Tri::unknown);
    } else if (through != 3) {
      t.add(Tri::yes);
      note(std::to_string(through) + " lines through intersection point " + std::to_string(i + 1));
      res.points.push_back(pts[i]);
    }
  }
  for (std::size_t a = 0; a < lines.size(); ++a)
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      auto X = join(lines[a].line, lines[b].line);
      if (!X) {
        t.add(Tri::yes);
        note(lines[a].label() + " equals " + lines[b].label());
        continue;
      }
      for (std::size_t c = b + 1; c < lines.size(); ++c) {
        Zero3 z = dependent(lines[a].line, lines[b].line, lines[c].line);
        if (z == Zero3::unknown) t.add(Tri::unknown);
        if (z != Zero3::zero) continue;
        bool known = false;
        for (const auto& p : pts) known |= same(*X, p) == Zero3::zero;
        if (!known) {
          t.add(Tri::yes);
          note(lines[a].label() + ", " + lines[b].label() + ", " + lines[c].label() + " concurrent off the intersection points");
          res.points.push_back(*X);
        }
      }
    }
  res.verdict = t.verdict();
  return res;
}

S6Result s6_at_precision(const Configuration& cfg) {
  S6Result out;
  GenericityReport& rep = out.report;
  auto pairs = all_intersections(cfg);
  ConditionResult c1 = cond_smooth(cfg, "s6.1");
  ConditionResult c2 = cond_transversal(cfg, pairs, "s6.2");
  rep.conditions.push_back(c1);
  rep.conditions.push_back(c2);
  bool base_ok = c1.verdict == Verdict::pass && c2.verdict == Verdict::pass;
  if (base_ok) {
    rep.conditions.push_back(cond_common_tangent(cfg, "s6.3"));
  } else {
    rep.conditions.push_back(skipped("s6.3", "conditions (1)/(2) do not pass"));
  }
  std::array<std::array<ProjVec, 4>, 3> pts;
  bool buildable = true;
  for (int g = 0; g < 3; ++g) {
    const auto& pi = pairs[g];
    if (pi.common_component || pi.records.size() != 4) {
      buildable = false;
      continue;
    }
    for (int k = 0; k < 4; ++k) pts[g][k] = pi.records[k].point;
  }
  if (buildable) {
    try {
      out.lines = build_line_system(pts);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateIntersection) throw;
      buildable = false;
    }
  }
  if (!buildable) {
    rep.conditions.push_back(skipped("s6.4", "line system not defined"));
    return out;
  }
  out.distinct_lines = distinct_line_count(*out.lines);
  rep.notes.push_back(std::to_string(out.distinct_lines) + " of 18 lines pairwise distinct");
  if (base_ok) {
    rep.conditions.push_back(cond_line_incidence(*out.lines, "s6.4"));
  } else {
    rep.conditions.push_back(skipped("s6.4", "conditions (1)/(2) do not pass"));
  }
  return out;
}

}  // namespace

S6Result genericity_check_s6(const HomPoly& q1, const HomPoly& q2, const HomPoly& q3) {
  Configuration cfg = Configuration::make({q1, q2, q3}, {2, 2, 2});
  for (long prec = working_precision();; prec *= 2) {
    PrecisionScope scope(prec);
    S6Result out = s6_at_precision(cfg);
    out.report.precision_bits = prec;
    if (!out.report.any_undecided() || prec * 2 > precision_cap()) {
      if (!out.lines)
        throw DegenerateIntersectionError("the quadric pairs do not meet in four distinct points each", std::move(out.report));
      return out;
    }
  }
}

Tri in_general_position(const std::vector<ProjVec>& lines) {
  bool unknown = false;
  for (std::size_t a = 0; a < lines.size(); ++a)
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      Zero3 s = same(lines[a], lines[b]);
      if (s == Zero3::zero) return Tri::no;
      if (s == Zero3::unknown) unknown = true;
      for (std::size_t c = b + 1; c < lines.size(); ++c) {
        Zero3 d = dependent(lines[a], lines[b], lines[c]);
        if (d == Zero3::zero) return Tri::no;
        if (d == Zero3::unknown) unknown = true;
      }
    }
  return unknown ? Tri::unknown : Tri::yes;
}

std::vector<SystemLine> select_general_position(const LineSystem& ls) {
  std::vector<std::string> diag;
  for (int d12 = 0; d12 < 3; ++d12)
    for (int d13 = 0; d13 < 3; ++d13)
      for (int d23 = 0; d23 < 3; ++d23) {
        const int drop[3] = {d12, d13, d23};
        std::vector<SystemLine> pick;
        for (int g = 0; g < 3; ++g)
          for (int k = 0; k < 6; ++k)
            if (k / 2 != drop[g]) pick.push_back(ls.groups[g][k]);
        std::vector<ProjVec> lines;
        for (const auto& s : pick) lines.push_back(s.line);
        Tri ok = in_general_position(lines);
        if (ok == Tri::yes) return pick;
        // first offending pair or triple, for the diagnostics
        std::string why = "undecided at precision";
        for (std::size_t a = 0; a < lines.size() && why[0] == 'u'; ++a)
          for (std::size_t b = a + 1; b < lines.size() && why[0] == 'u'; ++b) {
            if (same(lines[a], lines[b]) == Zero3::zero) why = pick[a].label() + " = " + pick[b].label();
            for (std::size_t c = b + 1; c < lines.size() && why[0] == 'u'; ++c)
              if (dependent(lines[a], lines[b], lines[c]) == Zero3::zero)
                why = pick[a].label() + ", " + pick[b].label() + ", " + pick[c].label() + " concurrent";
          }
        diag.push_back("drop (" + std::to_string(d12) + "," + std::to_string(d13) + "," + std::to_string(d23) + "): " + why);
      }
  throw NoValidSelectionError("no selection of 12 lines is in general position", std::move(diag));
}

}  // namespace pcurves
