#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "covgerm/bipoly.hpp"
#include "covgerm/cli.hpp"
#include "covgerm/poly_json.hpp"

using namespace covgerm;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "covgerm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  std::string path = std::string(P_tmpdir) + "/covgerm_test_" + name + ".json";
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("construct emits the row 2 closed form") {
  Run r = run({"construct", "--case", "b", "--k1", "2", "--k2", "3", "--l1", "1", "--l2", "0"});
  REQUIRE(r.code == kExitOk);
  json j = json::parse(r.out);
  BiPoly u = json_io::bipoly_from_json(j["u"]);
  BiPoly x = BiPoly::x(), y = BiPoly::y();
  CHECK(u == (y.pow(3).scaled(3) - x.pow(2)).shifted(1, 0).scaled(Rational(1, 2)));
  CHECK(j["builder"] == "row2");
  CHECK(j["frame"] == "standard");
}

TEST_CASE("resolve and enumerate") {
  Run r = run({"resolve", "--d1", "3", "--d2", "2"});
  REQUIRE(r.code == kExitOk);
  json j = json::parse(r.out);
  CHECK(j["full_chain"] == json::array({-3, -1, -2}));
  CHECK(j["determinants"] == json::array({3, 2}));
  Run e = run({"enumerate", "--max-n", "1"});
  CHECK(e.code == kExitOk);
  CHECK(json::parse(e.out) == json::array());
  Run e3 = run({"enumerate", "--max-n", "3"});
  CHECK(json::parse(e3.out).size() >= 2);
}

TEST_CASE("usage and parameter errors exit 2") {
  CHECK(run({"construct", "--case", "b", "--k1", "1", "--k2", "1", "--l1", "1", "--l2", "1"}).code == kExitUsage);
  CHECK(run({"construct", "--case", "c", "--k1", "1", "--k2", "1", "--l1", "1", "--l2", "1"}).code == kExitUsage);
  CHECK(run({"construct", "--case", "b", "--k1", "1", "--k2", "2", "--l1", "1", "--l2", "2"}).code == kExitUsage);
  CHECK(run({"resolve", "--d1", "4", "--d2", "2"}).code == kExitUsage);
  CHECK(run({"belyi", "--alpha", "4", "--beta", "2,2", "--mid", "2"}).code == kExitUsage);
  CHECK(run({"verify", "--file", "/nonexistent/file.json"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
}

TEST_CASE("verify round trip and a mutated file") {
  Run c = run({"construct", "--case", "b", "--k1", "2", "--k2", "3", "--l1", "1", "--l2", "1", "--sign", "-"});
  REQUIRE(c.code == kExitOk);
  std::string path = temp_file("b_n3", c.out);
  Run v = run({"verify", "--file", path});
  CHECK(v.code == kExitOk);
  json report = json::parse(v.out);
  for (const auto& entry : report) CHECK(entry["pass"] == true);

  json j = json::parse(c.out);
  j["u"]["terms"][0]["c"][0] = "12345/1";
  std::string bad = temp_file("b_n3_bad", j.dump());
  Run vb = run({"verify", "--file", bad});
  CHECK(vb.code == kExitVerifyFailed);
  CHECK(vb.err.find("check_jacobian_form") != std::string::npos);
  std::remove(path.c_str());
  std::remove(bad.c_str());
}

TEST_CASE("newton construct verifies in tolerance mode") {
  Run c = run({"construct", "--case", "b", "--k1", "1", "--k2", "2", "--l1", "1", "--l2", "2", "--method", "newton"});
  REQUIRE(c.code == kExitOk);
  std::string path = temp_file("newton", c.out);
  Run v = run({"verify", "--file", path});
  CHECK(v.code == kExitOk);
  std::remove(path.c_str());
}

TEST_CASE("belyi search and extra report") {
  Run b = run({"belyi", "--alpha", "5", "--beta", "3,2", "--mid", "2", "--count"});
  REQUIRE(b.code == kExitOk);
  CHECK(json::parse(b.out)["count"] == 1);
  Run full = run({"belyi", "--alpha", "1,2", "--beta", "3", "--mid", "2"});
  CHECK(full.code == kExitOk);
  Run x = run({"extra", "--p", "2", "--q", "3"});
  CHECK(x.code == kExitOk);
  CHECK(json::parse(x.out).size() == 4);
}

TEST_CASE("identical invocations are byte-identical") {
  std::vector<std::string> args{"--seed", "17", "construct", "--case", "b", "--k1", "1", "--k2", "2",
                                "--l1", "1", "--l2", "2", "--method", "newton"};
  CHECK(run(args).out == run(args).out);
  std::vector<std::string> ex{"--seed", "5", "extra", "--p", "3", "--q", "5"};
  CHECK(run(ex).out == run(ex).out);
}
