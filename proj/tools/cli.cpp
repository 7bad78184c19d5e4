#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "pcurves/arrangement/genericity.hpp"
#include "pcurves/arrangement/pencil.hpp"
#include "pcurves/borel/borel.hpp"
#include "pcurves/nevanlinna/nevanlinna.hpp"
#include "pcurves/poly/parse.hpp"
#include "pcurves/poly/roots.hpp"

namespace pcurves::cli {

using json = nlohmann::ordered_json;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  long precision = 256;
  long cap = 4096;
  std::string radii;
  std::optional<double> tolerance;
  std::string json_out;
  std::uint64_t seed = 0x5eed;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(what + ": " + e.what());
  }
}

HomPoly poly_arg(const std::string& s) {
  try {
    return parse_poly(s);
  } catch (const Error& e) {
    throw InputError("'" + s + "': " + e.what());
  }
}

std::vector<HomPoly> poly_list(const json& arr, const std::string& field) {
  if (!arr.is_array()) throw InputError("'" + field + "' must be an array of polynomial strings");
  std::vector<HomPoly> out;
  for (const auto& v : arr) {
    if (!v.is_string()) throw InputError("'" + field + "' entries must be strings");
    out.push_back(poly_arg(v.get<std::string>()));
  }
  return out;
}

Configuration read_config(const json& in) {
  if (!in.is_object() || !in.contains("family") || !in.contains("components"))
    throw InputError("configuration needs 'family' and 'components'");
  std::vector<int> family;
  try {
    family = in.at("family").get<std::vector<int>>();
  } catch (const json::exception&) {
    throw InputError("'family' must be an array of integers");
  }
  auto comps = poly_list(in.at("components"), "components");
  try {
    return Configuration::make(comps, family);
  } catch (const Error& e) {
    throw InputError(std::string("invalid configuration: ") + e.what());
  }
}

std::vector<int> sorted_family(const Configuration& c) {
  std::vector<int> f = c.family;
  std::sort(f.begin(), f.end());
  return f;
}

json point_json(const ProjVec& p) {
  auto c = p.coord_strings(20);
  json j{{"coords", {c[0], c[1], c[2]}}, {"radius", p.radius_string()}};
  if (p.exact) j["exact"] = {to_string((*p.exact)[0]), to_string((*p.exact)[1]), to_string((*p.exact)[2])};
  return j;
}

json ball_json(const CBall& b) { return {{"value", b.mid.to_string(20)}, {"radius", b.rad.to_string(6)}}; }

json condition_json(const ConditionResult& c) {
  json j{{"key", c.key}, {"verdict", verdict_name(c.verdict)}, {"detail", c.detail}};
  j["points"] = json::array();
  for (const auto& p : c.points) j["points"].push_back(point_json(p));
  j["lines"] = json::array();
  for (const auto& l : c.lines) j["lines"].push_back(point_json(l));
  return j;
}

json report_json(const GenericityReport& r) {
  json j{{"conditions", json::array()}, {"notes", r.notes}, {"precision_bits", r.precision_bits}};
  for (const auto& c : r.conditions) j["conditions"].push_back(condition_json(c));
  return j;
}

json line_json(const SystemLine& l) { return {{"label", l.label()}, {"group", l.group}, {"a", l.a}, {"b", l.b}, {"line", point_json(l.line)}}; }

json line_system_json(const LineSystem& ls) {
  json j{{"points", json::array()}, {"lines", json::array()}};
  for (const auto& g : ls.points) {
    json grp = json::array();
    for (const auto& p : g) grp.push_back(point_json(p));
    j["points"].push_back(grp);
  }
  for (const auto& l : ls.all()) j["lines"].push_back(line_json(l));
  return j;
}

struct Tally {
  bool fail = false, undecided = false;
  void add(Verdict v) {
    if (v == Verdict::fail) fail = true;
    if (v == Verdict::undecided) undecided = true;
  }
  void add(const GenericityReport& r) {
    for (const auto& c : r.conditions) add(c.verdict);
  }
  int exit() const { return fail ? Exit::failed : undecided ? Exit::undecided : Exit::ok; }
  const char* name() const { return fail ? "fail" : undecided ? "undecided" : "pass"; }
};

json error_json(const std::string& code, const std::string& message) { return {{"code", code}, {"message", message}}; }

int cmd_check_config(const json& in, json& rep) {
  Configuration cfg = read_config(in);
  Tally t;
  GenericityReport s4 = genericity_check_s4(cfg);
  rep["s4"] = report_json(s4);
  t.add(s4);
  const auto fam = sorted_family(cfg);
  if (fam == std::vector<int>{2, 2, 2}) {
    try {
      S6Result s6 = genericity_check_s6(cfg.components[0], cfg.components[1], cfg.components[2]);
      rep["s6"] = report_json(s6.report);
      rep["s6"]["distinct_lines"] = s6.distinct_lines;
      if (s6.lines) rep["s6"]["line_system"] = line_system_json(*s6.lines);
      t.add(s6.report);
    } catch (const DegenerateIntersectionError& e) {
      rep["s6"] = report_json(e.report);
      rep["s6"]["error"] = error_json(error_code_name(e.code()), e.what());
      t.fail = true;
    }
  }
  try {
    json c = json::array();
    for (const auto& e : cor31_hypothesis_check(cfg)) {
      c.push_back({{"component", e.component}, {"distinct_points", e.distinct_points}, {"verdict", verdict_name(e.verdict)}});
      t.add(e.verdict);
    }
    rep["cor31"] = c;
  } catch (const Error& e) {
    rep["cor31"] = {{"error", error_json(error_code_name(e.code()), e.what())}};
    t.fail = true;
  }
  if (fam == std::vector<int>{1, 2, 2} || fam == std::vector<int>{2, 2, 2}) {
    json items = json::array();
    for (const auto& it : contact_obstruction_check(cfg).items) {
      json j{{"item", it.item}, {"key", it.key}, {"title", it.title}, {"verdict", verdict_name(it.verdict)}, {"detail", it.detail}};
      j["points"] = json::array();
      for (const auto& p : it.points) j["points"].push_back(point_json(p));
      j["lines"] = json::array();
      for (const auto& l : it.lines) j["lines"].push_back(point_json(l));
      j["witnesses"] = json::array();
      for (const auto& w : it.witnesses) j["witnesses"].push_back(w.to_string());
      items.push_back(j);
      t.add(it.verdict);
    }
    rep["obstructions"] = items;
  } else {
    rep["obstructions"] = "skipped: family is neither (1,2,2) nor (2,2,2)";
  }
  rep["verdict"] = t.name();
  return t.exit();
}

int cmd_lines(const json& in, json& rep) {
  Configuration cfg = read_config(in);
  if (sorted_family(cfg) != std::vector<int>{2, 2, 2}) throw InputError("the line system needs three quadrics");
  S6Result s6;
  try {
    s6 = genericity_check_s6(cfg.components[0], cfg.components[1], cfg.components[2]);
  } catch (const DegenerateIntersectionError& e) {
    rep["report"] = report_json(e.report);
    rep["error"] = error_json(error_code_name(e.code()), e.what());
    return Exit::failed;
  }
  rep["report"] = report_json(s6.report);
  rep["distinct_lines"] = s6.distinct_lines;
  if (!s6.lines) {
    rep["error"] = error_json("DegenerateIntersection", "line system unavailable");
    return Exit::failed;
  }
  rep["line_system"] = line_system_json(*s6.lines);
  try {
    json sel = json::array();
    for (const auto& l : select_general_position(*s6.lines)) sel.push_back(line_json(l));
    rep["selection"] = sel;
    return Exit::ok;
  } catch (const NoValidSelectionError& e) {
    rep["selection"] = {{"error", error_json(error_code_name(e.code()), e.what())}, {"diagnostics", e.diagnostics}};
    return Exit::failed;
  }
}

json square_json(const SquareCombination& s) {
  json j{{"exact", s.exact}, {"nonzero_count", s.nonzero_count}};
  if (s.exact) {
    json a = json::array();
    for (const auto& x : s.a) a.push_back(to_string(x));
    j["a"] = a;
    j["radicand"] = to_string(s.root.radicand);
    j["linear"] = s.root.linear.to_string();
  }
  json an = json::array();
  for (const auto& x : s.a_num) an.push_back(ball_json(x));
  j["a_num"] = an;
  j["radicand_num"] = ball_json(s.radicand_num);
  j["linear_num"] = {ball_json(s.linear_num[0]), ball_json(s.linear_num[1]), ball_json(s.linear_num[2])};
  return j;
}

int cmd_square(const json& in, json& rep) {
  const char* field = in.contains("quadrics") ? "quadrics" : "components";
  if (!in.contains(field)) throw InputError("input needs 'quadrics'");
  auto q = poly_list(in.at(field), field);
  if (q.size() != 3) throw InputError("exactly three quadrics are required");
  try {
    json out = json::array();
    for (const auto& s : square_combination(q[0], q[1], q[2])) out.push_back(square_json(s));
    rep["combinations"] = out;
    return Exit::ok;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::WrongDegree) throw InputError(e.what());
    rep["combinations"] = json::array();
    rep["error"] = error_json(error_code_name(e.code()), e.what());
    return Exit::failed;
  }
}

int cmd_verify_example(json& rep) {
  ExampleReport r = example_verify();
  rep["quadrics"] = {r.quadrics[0].to_string(), r.quadrics[1].to_string(), r.quadrics[2].to_string()};
  rep["square"] = {{"coefficients", {to_string(r.square_coeffs[0]), to_string(r.square_coeffs[1]), to_string(r.square_coeffs[2])}},
                   {"root", r.square_root.to_string()},
                   {"exact_identity", r.square_exact},
                   {"found_by_solver", r.square_found}};
  rep["b4_found"] = r.b4_found;
  json items = json::array();
  for (const auto& c : r.items) items.push_back(condition_json(c));
  rep["items"] = items;
  rep["verdict"] = r.all_pass() ? "pass" : "fail";
  return r.all_pass() ? Exit::ok : Exit::failed;
}

cplx coeff_value(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_string()) {
    try {
      return parse_complex(v.get<std::string>());
    } catch (const Error& e) {
      throw InputError(e.what());
    }
  }
  throw InputError("coefficients must be numbers or \"a+bi\" strings");
}

XiPoly xi_from(const json& arr) {
  if (!arr.is_array()) throw InputError("exponent polynomials must be arrays");
  std::vector<cplx> c;
  for (const auto& v : arr) c.push_back(coeff_value(v));
  return XiPoly(c);
}

ExpCurve read_curve(const json& in) {
  if (!in.is_object()) throw InputError("curve must be a JSON object");
  int maxdeg = 1;
  ExpCurve f;
  if (in.contains("exponents")) {
    std::vector<XiPoly> e;
    for (const auto& p : in.at("exponents")) {
      e.push_back(xi_from(p));
      maxdeg = std::max(maxdeg, e.back().degree());
    }
    try {
      return ExpCurve::from_exponents(e, in.value("order", maxdeg));
    } catch (const Error& err) {
      throw InputError(err.what());
    }
  }
  if (!in.contains("components")) throw InputError("curve needs 'exponents' or 'components'");
  for (const auto& comp : in.at("components")) {
    ExpSum g;
    for (const auto& term : comp) {
      if (!term.is_object() || !term.contains("exponent")) throw InputError("component terms need 'exponent'");
      XiPoly e = xi_from(term.at("exponent"));
      maxdeg = std::max(maxdeg, e.degree());
      g = g + coeff_value(term.value("coeff", json(1.0))) * ExpSum::exp_of(e);
    }
    f.components.push_back(g);
  }
  if (f.components.size() < 2 || f.components.size() > 3) throw InputError("curves in P^1 or P^2 only");
  f.order_bound = in.value("order", maxdeg);
  if (maxdeg > f.order_bound) throw InputError("exponent degree exceeds the order bound");
  return f;
}

json main_json(const MainTheoremReport& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.radii.size(); ++i) rows.push_back({{"r", m.radii[i]}, {"T", m.T[i]}, {"N", m.N[i]}, {"slack", m.slack[i]}});
  return {{"samples", rows},     {"fitted_c", m.fitted_c}, {"abs_c", m.abs_c}, {"variation", m.variation},
          {"exceptional", m.exceptional}, {"verdict", m.pass ? "pass" : "fail"}, {"detail", m.detail}};
}

struct NevFlags {
  std::vector<std::string> divisors;
  bool fmt = false, smt = false;
  std::string morphism;
  std::string norm = "cartan";
};

int cmd_nevanlinna(const json& in, const NevFlags& fl, const Settings& st, json& rep) {
  ExpCurve f = read_curve(in);
  std::vector<double> radii = parse_radii(st.radii.empty() ? "logspace:1:2:9" : st.radii);
  for (double r : radii)
    if (!(r >= kR0)) throw InputError("radii must be >= 1");
  std::vector<HomPoly> divs;
  for (const auto& d : fl.divisors) {
    divs.push_back(poly_arg(d));
    for (const auto& [e, c] : divs.back().terms())
      for (int k = f.dim() + 1; k < 3; ++k)
        if (e[k] > 0) throw InputError("divisor '" + d + "' uses a coordinate the curve does not have");
  }
  if ((fl.fmt || fl.smt) && divs.empty()) throw InputError("--fmt/--smt need at least one --divisor");
  if (fl.smt && !linearly_nondegenerate(f)) throw Error(ErrorCode::DegenerateCurve, "the components satisfy a linear relation");
  Norm norm = fl.norm == "euclidean" ? Norm::euclidean : Norm::cartan;
  int code = Exit::ok;

  GrowthSample g = sample_growth(f, radii, norm);
  json growth = json::array();
  for (std::size_t i = 0; i < radii.size(); ++i) growth.push_back({g.radii[i], g.values[i], g.errors[i]});
  rep["curve"] = {{"dimension", f.dim()}, {"order_bound", f.order_bound}, {"constant", f.is_constant()},
                  {"linearly_nondegenerate", linearly_nondegenerate(f)}};
  rep["norm"] = fl.norm;
  rep["growth"] = growth;
  rep["monotone"] = g.monotone();
  try {
    OrderEstimate o = order_estimate(g);
    rep["order"] = {{"value", o.value}, {"degenerate", o.degenerate}, {"points", o.points}};
  } catch (const Error& e) {
    rep["order"] = {{"error", error_json(error_code_name(e.code()), e.what())}};
  }

  json dj = json::array();
  for (std::size_t k = 0; k < divs.size(); ++k) {
    json entry{{"divisor", fl.divisors[k]}, {"degree", divs[k].degree()}};
    try {
      CountingSample cs = counting(f, divs[k], radii.back());
      json zs = json::array();
      for (const auto& z : cs.zeros) zs.push_back({z.z.real(), z.z.imag(), z.multiplicity});
      json cnt = json::array();
      for (double r : radii) cnt.push_back({r, cs.n(r), cs.N(r)});
      entry["zeros"] = zs;
      entry["counting"] = cnt;
      DefectEstimate d = defect_estimate(f, divs[k], radii);
      json ratios = json::array();
      for (std::size_t i = 0; i < d.radii.size(); ++i) ratios.push_back({d.radii[i], d.ratios[i]});
      entry["defect"] = {{"value", d.value}, {"window_start", d.window_start}, {"no_zeros", d.no_zeros}, {"ratios", ratios}};
    } catch (const Error& e) {
      entry["error"] = error_json(error_code_name(e.code()), e.what());
      code = Exit::failed;
    }
    dj.push_back(entry);
  }
  rep["divisors"] = dj;

  if (fl.fmt) {
    auto m = main_theorem_check(f, divs, MainKind::first, radii);
    rep["fmt"] = main_json(m);
    if (!m.pass) code = Exit::failed;
  }
  if (fl.smt) {
    auto m = main_theorem_check(f, divs, MainKind::second, radii);
    rep["smt"] = main_json(m);
    if (!m.pass) code = Exit::failed;
  }
  if (!fl.morphism.empty()) {
    std::vector<HomPoly> r;
    std::stringstream ss(fl.morphism);
    for (std::string part; std::getline(ss, part, ';');) r.push_back(poly_arg(part));
    auto fr = functoriality_check(f, r, radii, st.tolerance.value_or(0.1));
    json rows = json::array();
    for (std::size_t i = 0; i < fr.radii.size(); ++i) rows.push_back({fr.radii[i], fr.difference[i]});
    rep["functoriality"] = {{"p", fr.p}, {"difference", rows}, {"variation", fr.variation}, {"verdict", fr.pass ? "pass" : "fail"}};
    if (!fr.pass) code = Exit::failed;
  }
  return code;
}

struct DemoFlags {
  std::vector<std::string> alpha, beta, gamma;
  double radius = 20;
  bool no_cross_check = false;
};

int cmd_demo(const DemoFlags& fl, const Settings& st, json& rep) {
  auto three = [](const std::vector<std::string>& v, const char* name) {
    if (v.size() != 3) throw InputError(std::string("--") + name + " needs exactly three values");
    std::array<cplx, 3> a;
    for (int i = 0; i < 3; ++i) {
      try {
        a[i] = parse_complex(v[i]);
      } catch (const Error& e) {
        throw InputError(e.what());
      }
    }
    return a;
  };
  auto alphas = three(fl.alpha, "alpha");
  std::optional<ThreeQuadricsData> data;
  if (!fl.beta.empty() || !fl.gamma.empty()) {
    ThreeQuadricsData d;
    if (!fl.beta.empty()) d.beta = three(fl.beta, "beta");
    if (!fl.gamma.empty()) d.gamma = three(fl.gamma, "gamma");
    data = d;
  }
  if (!(fl.radius >= kR0)) throw InputError("--radius must be >= 1");
  auto r = three_quadrics_certificate(alphas, data, !fl.no_cross_check, fl.radius, st.tolerance.value_or(0.01));
  rep["alphas"] = {format_complex(alphas[0]), format_complex(alphas[1]), format_complex(alphas[2])};
  rep["X"] = r.X;
  rep["lhs"] = r.lhs;
  rep["rhs"] = r.rhs;
  rep["contradiction"] = r.contradiction;
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"map", c.map}, {"expected", c.expected}, {"observed", c.observed}, {"rel_error", c.rel_error}, {"pass", c.pass}});
  rep["cross_check"] = {{"radius", r.radius}, {"checks", checks}};
  return Exit::ok;
}

json manifest_json(const std::string& command, const std::string& digest, const Settings& st, const std::vector<std::string>& args) {
  json m{{"command", command},
         {"arguments", args},
         {"input_digest", "sha256:" + digest},
         {"precision_bits", st.precision},
         {"precision_cap", st.cap},
         {"seed", st.seed},
         {"tool_version", kVersion}};
  m["tolerance"] = st.tolerance ? json(*st.tolerance) : json(nullptr);
  if (const char* e = std::getenv("SOURCE_DATE_EPOCH")) {
    std::time_t t = static_cast<std::time_t>(std::strtoll(e, nullptr, 10));
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    m["timestamp"] = buf;
  } else {
    m["timestamp"] = nullptr;
  }
  return m;
}

void add_common(CLI::App* sub, Settings& st) {
  sub->add_option("--precision-bits", st.precision, "working precision in bits")->check(CLI::Range(64, 4096));
  sub->add_option("--precision-cap", st.cap, "precision escalation cap in bits")->check(CLI::Range(64, 4096));
  sub->add_option("--radii", st.radii, "\"r1,r2,...\" or \"logspace:a:b:n\"");
  sub->add_option("--tolerance", st.tolerance, "numeric tolerance for pass/fail verdicts");
  sub->add_option("--json-out", st.json_out, "also write the report to this file");
  sub->add_option("--seed", st.seed, "seed for randomized searches");
}

}  // namespace

std::vector<double> parse_radii(const std::string& spec) {
  std::vector<double> out;
  auto num = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw InputError("bad radius '" + s + "'");
    }
    if (used != s.size()) throw InputError("bad radius '" + s + "'");
    return v;
  };
  if (spec.rfind("logspace:", 0) == 0) {
    std::vector<std::string> parts;
    std::stringstream ss(spec.substr(9));
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw InputError("logspace needs a:b:n");
    double a = num(parts[0]), b = num(parts[1]);
    int n = static_cast<int>(num(parts[2]));
    if (n < 2) throw InputError("logspace needs n >= 2");
    for (int k = 0; k < n; ++k) out.push_back(std::pow(10.0, a + (b - a) * k / (n - 1)));
  } else {
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ',');) out.push_back(num(p));
  }
  if (out.empty()) throw InputError("no radii");
  if (!std::is_sorted(out.begin(), out.end())) throw InputError("radii must be increasing");
  return out;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string s;
  for (unsigned int i = 0; i < len; ++i) {
    s += hex[md[i] >> 4];
    s += hex[md[i] & 15];
  }
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Plane quadric and line configurations: genericity, square combinations and value distribution", "pcurves"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Settings st;
  std::string path;
  NevFlags nf;
  DemoFlags df;

  auto* check = app.add_subcommand("check-config", "run the genericity, distinct-point and contact checks on a configuration");
  auto* lines = app.add_subcommand("lines", "build the 18-line system and a 12-line selection");
  auto* square = app.add_subcommand("square", "find square combinations of three quadrics");
  auto* example = app.add_subcommand("verify-example", "verify the worked (1,2,2) example");
  auto* nev = app.add_subcommand("nevanlinna", "characteristic, counting, order and defect of an exponential curve");
  auto* demo = app.add_subcommand("demo-three-quadrics", "three-quadrics growth certificate");
  for (auto* s : {check, lines, square, nev}) s->add_option("input", path, "input JSON file")->required();
  for (auto* s : {check, lines, square, example, nev, demo}) add_common(s, st);
  nev->add_option("--divisor", nf.divisors, "divisor polynomial (repeatable)");
  nev->add_flag("--fmt", nf.fmt, "first main theorem check over the divisors");
  nev->add_flag("--smt", nf.smt, "second main theorem check over the divisors (hyperplanes)");
  nev->add_option("--morphism", nf.morphism, "forms \"p0;p1;...\" for the functoriality check");
  nev->add_option("--norm", nf.norm, "cartan or euclidean")->check(CLI::IsMember({"cartan", "euclidean"}));
  demo->add_option("--alpha", df.alpha, "three complex leading coefficients")->required();
  demo->add_option("--beta", df.beta, "three complex linear coefficients");
  demo->add_option("--gamma", df.gamma, "three complex constants");
  demo->add_option("--radius", df.radius, "cross-check radius");
  demo->add_flag("--no-cross-check", df.no_cross_check, "skip the quadrature cross-check");

  std::vector<std::string> argv_store{"pcurves"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Exit::ok : Exit::bad_input;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  json rep;
  int code = Exit::ok;
  try {
    if (st.precision > st.cap) throw InputError("--precision-bits exceeds --precision-cap");
    PrecisionScope scope(st.precision);
    set_precision_cap(st.cap);
    std::string digest_src;
    json in;
    if (!path.empty()) {
      digest_src = read_file(path);
      in = parse_json(digest_src, path);
    } else {
      for (const auto& a : args) digest_src += a + '\n';
    }
    rep["manifest"] = manifest_json(command, sha256_hex(digest_src), st, args);
    if (command == "check-config") {
      code = cmd_check_config(in, rep);
    } else if (command == "lines") {
      code = cmd_lines(in, rep);
    } else if (command == "square") {
      code = cmd_square(in, rep);
    } else if (command == "verify-example") {
      code = cmd_verify_example(rep);
    } else if (command == "nevanlinna") {
      code = cmd_nevanlinna(in, nf, st, rep);
    } else {
      code = cmd_demo(df, st, rep);
    }
  } catch (const InputError& e) {
    rep["error"] = error_json("InputError", e.what());
    code = Exit::bad_input;
  } catch (const Error& e) {
    rep["error"] = error_json(error_code_name(e.code()), e.what());
    code = e.code() == ErrorCode::DegenerateCurve      ? Exit::degenerate
           : e.code() == ErrorCode::PrecisionExhausted ? Exit::undecided
                                                       : Exit::failed;
  }
  if (!rep.contains("manifest")) rep["manifest"] = manifest_json(command, sha256_hex(""), st, args);
  rep["exit_code"] = code;
  const std::string text = rep.dump(2) + "\n";
  out << text;
  if (!st.json_out.empty()) {
    std::ofstream f(st.json_out, std::ios::binary);
    if (!f) {
      err << "cannot write " << st.json_out << "\n";
      return Exit::bad_input;
    }
    f << text;
  }
  if (code != Exit::ok && rep.contains("error")) err << "pcurves " << command << ": " << rep["error"]["message"].get<std::string>() << "\n";
  return code;
}

}  // namespace pcurves::cli
