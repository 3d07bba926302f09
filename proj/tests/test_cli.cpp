#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "gpd/config_io.hpp"
#include "gpd/configs.hpp"
#include "gpd/groups.hpp"

using namespace gpd;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(GPD_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe)) {
    result.output.append(buffer.data(), n);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

FieldElement element_from_json(const Field& f, const json& j) {
  std::vector<Rational> coeffs;
  for (const json& c : j) {
    if (c.is_string()) {
      coeffs.emplace_back(Rational(c.get<std::string>()));
    } else {
      coeffs.emplace_back(c.get<long long>());
    }
  }
  return f.element(std::move(coeffs));
}

}  // namespace

TEST_CASE("analyze reports the classification") {
  RunResult klein = run_cli("analyze --builtin klein");
  CHECK(klein.exit_code == 0);
  CHECK(klein.output.find("order 24, label S4") != std::string::npos);
  CHECK(klein.output.find("marked invariance: holds") != std::string::npos);

  RunResult d4 = run_cli("analyze --builtin d4");
  CHECK(d4.exit_code == 0);
  CHECK(d4.output.find("D(6) (= S3)") != std::string::npos);

  RunResult quad = run_cli("analyze --builtin quadric4");
  CHECK(quad.exit_code == 0);
  CHECK(quad.output.find("Trivial") != std::string::npos);
}

TEST_CASE("exit codes") {
  // usage: no source given
  CHECK(run_cli("analyze").exit_code == 2);
  // usage: unknown subcommand
  CHECK(run_cli("frobnicate").exit_code == 2);
  // parse: malformed config document
  std::string path = "/tmp/gpd_cli_bad.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  RunResult bad = run_cli("analyze --config " + path);
  CHECK(bad.exit_code == 3);
  CHECK(bad.output.find("parse error") != std::string::npos);
  // precondition: orbit from a line index that does not exist
  CHECK(run_cli("orbit --builtin klein --line 99 --point 1,0").exit_code == 4);
  // usage: vertex-group base out of range
  CHECK(run_cli("analyze --builtin klein --base 99").exit_code == 2);
}

TEST_CASE("cap override turns a finite closure into an Infinite verdict") {
  RunResult res = run_cli("analyze --builtin klein --cap 10");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("Infinite (closure exceeded cap 10)") !=
        std::string::npos);
}

TEST_CASE("six-line subconfiguration classifies like the full D4") {
  RunResult res = run_cli("analyze --builtin d4sub6");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("order 6, label D(6) (= S3)") != std::string::npos);
}

TEST_CASE("orbit counts") {
  RunResult klein = run_cli("orbit --builtin klein --line 0 --point 1,0");
  CHECK(klein.exit_code == 0);
  CHECK(klein.output.find("60 members") != std::string::npos);

  RunResult half =
      run_cli("orbit --builtin penrose_half --line 0 --point 1,0");
  CHECK(half.exit_code == 0);
  CHECK(half.output.find("20 members") != std::string::npos);

  RunResult pen = run_cli("orbit --builtin penrose --line 0 --point 1,1");
  CHECK(pen.exit_code == 0);
  CHECK(pen.output.find("80 members") != std::string::npos);
}

TEST_CASE("stabilizer json round-trips to canonical values") {
  RunResult res = run_cli("stabilizer --set X --json");
  REQUIRE(res.exit_code == 0);
  json doc = json::parse(res.output);
  CHECK(doc["label"] == "A4");
  CHECK(doc["order"] == 12);
  REQUIRE(doc["elements"].size() == 12);

  GroupResult expected = stabilizer(penrose_parameter_sets().x);
  Field f = expected.elements.front().field();
  std::set<PglMap, PglMapLess> expected_set(expected.elements.begin(),
                                            expected.elements.end());
  for (const json& ej : doc["elements"]) {
    PglMap m(element_from_json(f, ej[0][0]), element_from_json(f, ej[0][1]),
             element_from_json(f, ej[1][0]), element_from_json(f, ej[1][1]));
    CHECK(expected_set.count(m) == 1);
  }
}

TEST_CASE("stabilizer with explicit field and points") {
  RunResult res = run_cli(
      "stabilizer --field 1,1,1 --points "
      "'[[[1],[0]],[[0],[1]],[[0,1],[1]],[[1,1],[1]]]'");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("label A4") != std::string::npos);

  RunResult named = run_cli("stabilizer --set Ytilde");
  CHECK(named.exit_code == 0);
  CHECK(named.output.find("order 24, label S4") != std::string::npos);

  std::string path = "/tmp/gpd_cli_points.json";
  {
    std::ofstream out(path);
    out << R"([[[1],[0]],[[0],[1]],[[0,1],[1]],[[1,1],[1]]])";
  }
  RunResult from_file =
      run_cli("stabilizer --field 1,1,1 --points @" + path);
  CHECK(from_file.exit_code == 0);
  CHECK(from_file.output.find("label A4") != std::string::npos);
}

TEST_CASE("analyze json is schema-stable and exact") {
  RunResult res = run_cli("analyze --builtin d4 --json");
  REQUIRE(res.exit_code == 0);
  json doc = json::parse(res.output);
  CHECK(doc["command"] == "analyze");
  CHECK(doc["lines"] == 16);
  CHECK(doc["generators"] == 480);
  CHECK(doc["aux_counts"]["min"] == 2);
  CHECK(doc["aux_counts"]["max"] == 2);
  REQUIRE(doc["vertex_groups"].size() == 1);
  CHECK(doc["vertex_groups"][0]["order"] == 6);
  CHECK(doc["vertex_groups"][0]["label"] == "D(6)");
  CHECK(doc["marked_invariance"]["holds"] == true);

  // Matrices re-parse to canonical group elements.
  Configuration d4 = builtin(Builtin::D4);
  GroupResult g = vertex_group(d4, 0);
  std::set<PglMap, PglMapLess> expected(g.elements.begin(), g.elements.end());
  Field f = d4.field;
  for (const json& ej : doc["vertex_groups"][0]["elements"]) {
    PglMap m(element_from_json(f, ej[0][0]), element_from_json(f, ej[0][1]),
             element_from_json(f, ej[1][0]), element_from_json(f, ej[1][1]));
    CHECK(expected.count(m) == 1);
  }
}

TEST_CASE("verify subset runs and reports") {
  RunResult res = run_cli("verify --only 4,11 --json");
  REQUIRE(res.exit_code == 0);
  json doc = json::parse(res.output);
  CHECK(doc["failed"] == 0);
  REQUIRE(doc["criteria"].size() == 2);
  CHECK(doc["criteria"][0]["id"] == 4);
  CHECK(doc["criteria"][0]["passed"] == true);
  CHECK(doc["criteria"][1]["id"] == 11);
}

TEST_CASE("config file round trip through the CLI") {
  std::string path = "/tmp/gpd_cli_klein.json";
  {
    std::ofstream out(path);
    out << emit_config(builtin(Builtin::Klein));
  }
  RunResult res = run_cli("analyze --config " + path);
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("order 24, label S4") != std::string::npos);
}
