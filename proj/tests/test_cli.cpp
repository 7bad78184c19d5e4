#include <cmath>
#include <cstdio>
#include <doctest.h>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "cli.hpp"

using json = nlohmann::ordered_json;
using pcurves::cli::Exit;

namespace {

struct Run {
  int code;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = pcurves::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(PCURVES_TEST_DATA) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = "pcurves_cli_test_" + name;
  std::ofstream(path) << content;
  return path;
}

const json* find_condition(const json& report, const std::string& key) {
  for (const auto& c : report["conditions"])
    if (c["key"] == key) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("parse_radii") {
  CHECK(pcurves::cli::parse_radii("10,50,200") == std::vector<double>{10, 50, 200});
  auto l = pcurves::cli::parse_radii("logspace:1:3:3");
  REQUIRE(l.size() == 3);
  CHECK(l[0] == doctest::Approx(10));
  CHECK(l[1] == doctest::Approx(100));
  CHECK(l[2] == doctest::Approx(1000));
  CHECK_THROWS(pcurves::cli::parse_radii("10,abc"));
  CHECK_THROWS(pcurves::cli::parse_radii("50,10"));
  CHECK_THROWS(pcurves::cli::parse_radii("logspace:1:2"));
  CHECK_THROWS(pcurves::cli::parse_radii("logspace:1:2:1"));
}

TEST_CASE("sha256 of known vectors") {
  CHECK(pcurves::cli::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(pcurves::cli::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("check-config: worked example is generic") {
  auto r = run({"check-config", data("worked_example.json")});
  CHECK(r.code == Exit::ok);
  auto j = r.report();
  CHECK(j["verdict"] == "pass");
  CHECK(j["manifest"]["command"] == "check-config");
  CHECK(j["manifest"]["precision_bits"] == 256);
  CHECK(j["obstructions"].size() == 5);
  for (const auto& it : j["obstructions"]) CHECK(it["verdict"] == "pass");
  CHECK_FALSE(j.contains("s6"));
}

TEST_CASE("check-config: duplicated component fails s4.2") {
  auto r = run({"check-config", data("duplicated.json")});
  CHECK(r.code == Exit::failed);
  auto j = r.report();
  const json* c = find_condition(j["s4"], "s4.2");
  REQUIRE(c);
  CHECK((*c)["verdict"] == "fail");
}

TEST_CASE("check-config: cyclic triple carries a line system") {
  auto r = run({"check-config", data("cyclic.json")});
  CHECK(r.code == Exit::failed);
  auto j = r.report();
  REQUIRE(j["s6"].contains("line_system"));
  CHECK(j["s6"]["line_system"]["lines"].size() == 18);
  CHECK(j["s6"]["line_system"]["points"].size() == 3);
  CHECK(j["s6"]["distinct_lines"] == 12);
}

TEST_CASE("lines: generic triple selects twelve lines, cyclic triple has none") {
  auto r = run({"lines", data("generic.json")});
  CHECK(r.code == Exit::ok);
  auto j = r.report();
  CHECK(j["distinct_lines"] == 18);
  REQUIRE(j["selection"].is_array());
  CHECK(j["selection"].size() == 12);
  std::array<int, 3> per{0, 0, 0};
  for (const auto& l : j["selection"]) ++per[l["group"].get<int>()];
  CHECK(per == std::array<int, 3>{4, 4, 4});

  auto c = run({"lines", data("cyclic.json")});
  CHECK(c.code == Exit::failed);
  CHECK(c.report()["selection"]["error"]["code"] == "NoValidSelection");

  CHECK(run({"lines", data("worked_example.json")}).code == Exit::bad_input);
}

TEST_CASE("square: worked example contains 225:100:4") {
  auto r = run({"square", data("square_example.json")});
  CHECK(r.code == Exit::ok);
  bool found = false;
  auto j = r.report();
  for (const auto& c : j["combinations"])
    if (c["exact"] == true && c["a"] == json::array({"225", "100", "4"})) {
      found = true;
      CHECK(c["linear"] == "15*z0 + 10*z1 + 2*z2");
      CHECK(c["radicand"] == "1");
    }
  CHECK(found);
}

TEST_CASE("verify-example") {
  auto r = run({"verify-example"});
  CHECK(r.code == Exit::ok);
  auto j = r.report();
  CHECK(j["square"]["exact_identity"] == true);
  CHECK(j["b4_found"] == true);
  CHECK(j["items"].size() == 5);
}

TEST_CASE("nevanlinna: line curve") {
  auto r = run({"nevanlinna", data("exp_line.json"), "--divisor", "z1 - z0", "--divisor", "z0", "--fmt", "--radii", "logspace:1:3:9"});
  CHECK(r.code == Exit::ok);
  auto j = r.report();
  for (const auto& s : j["growth"]) CHECK(s[1].get<double>() == doctest::Approx(s[0].get<double>() / std::numbers::pi).epsilon(1e-8));
  CHECK(j["order"]["value"].get<double>() == doctest::Approx(1.0).epsilon(0.05));
  CHECK(j["monotone"] == true);
  auto& d0 = j["divisors"][0];
  CHECK(d0["zeros"].size() == 1 + 2 * static_cast<int>(std::floor(1000 / (2 * std::numbers::pi))));
  bool at100 = false;
  for (const auto& row : d0["counting"])
    if (std::abs(row[0].get<double>() - 100) < 1e-9) {
      at100 = true;
      CHECK(row[1] == 31);
    }
  CHECK(at100);
  CHECK(j["divisors"][1]["zeros"].empty());
  CHECK(j["divisors"][1]["defect"]["value"] == 1.0);
  CHECK(j["fmt"]["verdict"] == "pass");
}

TEST_CASE("nevanlinna: functoriality and SMT flags") {
  auto r = run({"nevanlinna", data("exp_line.json"), "--morphism", "z0^2;z1^2;z0*z1", "--radii", "logspace:1:2:9"});
  CHECK(r.code == Exit::ok);
  CHECK(r.report()["functoriality"]["p"] == 2);
  auto s = run({"nevanlinna", data("exp_line.json"), "--divisor", "z0", "--divisor", "z1", "--divisor", "z0 - z1", "--smt", "--radii",
                "logspace:1:2:9"});
  CHECK(s.code == Exit::ok);
  CHECK(s.report()["smt"]["abs_c"].get<double>() < 3);
}

TEST_CASE("nevanlinna: degenerate curve exits 4") {
  auto r = run({"nevanlinna", data("exp_degenerate.json"), "--divisor", "z0", "--divisor", "z1", "--divisor", "z2", "--smt"});
  CHECK(r.code == Exit::degenerate);
  CHECK(r.report()["error"]["code"] == "DegenerateCurve");
}

TEST_CASE("nevanlinna: divisor containing the curve is a failed entry") {
  auto path = temp_file("square_curve.json", R"({"exponents": [[0], [0, 1], [0, 2]]})");
  auto r = run({"nevanlinna", path, "--divisor", "z1^2 - z0*z2", "--radii", "10,20"});
  CHECK(r.code == Exit::failed);
  CHECK(r.report()["divisors"][0]["error"]["code"] == "DivisorContainsCurve");
  std::remove(path.c_str());
}

TEST_CASE("demo-three-quadrics") {
  auto r = run({"demo-three-quadrics", "--alpha", "0", "1", "2"});
  CHECK(r.code == Exit::ok);
  auto j = r.report();
  CHECK(j["X"].get<double>() == doctest::Approx(2 / std::numbers::pi));
  CHECK(j["contradiction"] == true);
  CHECK(j["cross_check"]["checks"].size() == 4);
  for (const auto& c : j["cross_check"]["checks"]) CHECK(c["pass"] == true);
  auto eq = run({"demo-three-quadrics", "--alpha", "1+i", "1+i", "1+i", "--no-cross-check"});
  CHECK(eq.report()["contradiction"] == false);
  CHECK(eq.report()["cross_check"]["checks"].empty());
}

TEST_CASE("bad input exits 2") {
  CHECK(run({}).code == Exit::bad_input);
  CHECK(run({"frobnicate"}).code == Exit::bad_input);
  CHECK(run({"check-config"}).code == Exit::bad_input);
  CHECK(run({"check-config", "/nonexistent/file.json"}).code == Exit::bad_input);
  auto broken = temp_file("broken.json", "{\"family\": [2, 2,");
  CHECK(run({"check-config", broken}).code == Exit::bad_input);
  auto badpoly = temp_file("badpoly.json", R"({"family": [2, 2, 2], "components": ["z0^2 +", "z1^2", "z2^2"]})");
  auto r = run({"check-config", badpoly});
  CHECK(r.code == Exit::bad_input);
  CHECK(r.report()["error"]["code"] == "InputError");
  auto inhom = temp_file("inhom.json", R"({"family": [2, 2, 2], "components": ["z0^2 + z1", "z1^2", "z2^2"]})");
  CHECK(run({"check-config", inhom}).code == Exit::bad_input);
  CHECK(run({"nevanlinna", data("exp_line.json"), "--radii", "0.5,10"}).code == Exit::bad_input);
  CHECK(run({"nevanlinna", data("exp_line.json"), "--divisor", "z2"}).code == Exit::bad_input);
  CHECK(run({"check-config", data("cyclic.json"), "--precision-bits", "9000"}).code == Exit::bad_input);
  CHECK(run({"demo-three-quadrics", "--alpha", "0", "1"}).code == Exit::bad_input);
  CHECK(run({"--help"}).code == Exit::ok);
  for (const auto& p : {broken, badpoly, inhom}) std::remove(p.c_str());
}

TEST_CASE("determinism: repeated runs are byte-identical") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"check-config", data("generic.json")},
           {"lines", data("generic.json")},
           {"square", data("square_example.json")},
           {"nevanlinna", data("exp_quadratic.json"), "--divisor", "z1 - 2*z0", "--radii", "5,10,20"},
       }) {
    auto a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("json-out mirrors stdout") {
  std::string path = "pcurves_cli_test_out.json";
  auto r = run({"verify-example", "--json-out", path});
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == r.out);
  std::remove(path.c_str());
}
