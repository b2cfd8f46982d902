#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "../tools/cli.hpp"

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = m3k::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("construct writes catalog lines") {
  const RunResult r = run({"construct", "U(2,4)"});
  CHECK(r.code == 0);
  CHECK(r.out == "# U(2,4)\n4 2 111111\n");

  const RunResult rev = run({"construct", "uniform", "--r", "2", "--n", "4", "--format",
                             "revlex_star"});
  CHECK(rev.code == 0);
  CHECK(rev.out.find("4 2 ******") != std::string::npos);

  CHECK(run({"construct", "NOSUCH"}).code == 2);
}

TEST_CASE("analyze emits the L8 elasticity facts") {
  const RunResult r =
      run({"analyze", "--family", "L8", "--minor", "U(2,4)", "--report", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["three_connected"] == true);
  const auto& x1 = j["elements"][0];
  CHECK(x1["name"] == "x1");
  CHECK(x1["elastic"] == true);
  CHECK(x1["n_elastic"] == false);
  CHECK(j["elements"][1]["n_elastic"] == true);
}

TEST_CASE("analyze by file and index") {
  const std::string path = "m3k_cli_test.cat";
  {
    std::ofstream f(path);
    f << "4 2 111111\n";
  }
  const RunResult r = run({"analyze", "--file", path, "--index", "0", "--report", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 4);
  CHECK(j["rank"] == 2);
  CHECK(run({"analyze", "--file", path, "--index", "5"}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "--check", "NOPE", "--catalog", "gen:gf2:4"}).code == 2);
  const RunResult ok = run({"verify", "--check", "THM-ELASTIC4", "--catalog", "gen:gf2:5",
                            "--report", "json", "--no-timing"});
  CHECK(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j[0]["check_id"] == "THM-ELASTIC4");
  CHECK(j[0]["violations"].empty());
  CHECK(j[0]["elapsed_ms"] == 0);

  CHECK(run({"analyze"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({}).code == 2);
}
