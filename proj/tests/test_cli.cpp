#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hillwalk/cli.hpp"

using namespace hillwalk;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("beta table as CSV") {
  const auto r = run({"beta", "--potential", "1,1,1,3", "--n-list", "5,8,11"});
  REQUIRE(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header.rfind("n,beta_plus,beta_plus_abs,beta_minus", 0) == 0);
  std::string row;
  std::getline(lines, row);
  CHECK(row.rfind("5,", 0) == 0);
  CHECK(row.find("/") != std::string::npos);
  CHECK(row.find("inner_minus_outer=match") != std::string::npos);
}

TEST_CASE("empty index list gives an empty table") {
  const auto r = run({"beta", "--potential", "1,1,1,3", "--n-list", ""});
  CHECK(r.code == kExitOk);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
}

TEST_CASE("singular evaluation point") {
  const auto r = run({"beta", "--potential", "1,1,1,3", "--n-list", "3", "--z", "-8"});
  CHECK(r.code == kExitSingular);
  CHECK(r.err.find("n=3") != std::string::npos);
  CHECK(r.err.find("t=") != std::string::npos);
}

TEST_CASE("zero potential spectrum") {
  const auto r = run({"spectrum", "--potential", R"({"terms":[]})", "--K", "16", "--range", "1:4"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("2,4,0,4,0,0,") != std::string::npos);
  CHECK(r.out.find("4,16,0,16,0,0,") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({"spectrum", "--potential", "1,1,1,1", "--K", "0"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"beta", "--potential", "1,1,1"}).code == kExitUsage);
  CHECK(run({"beta", "--potential", "1,1,1,3", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"verdict", "--preset", "thm99"}).code == kExitUsage);
  CHECK(run({"verify", "--precision", "16"}).code == kExitUsage);
}

TEST_CASE("localization failure exit code") {
  const auto r = run({"spectrum", "--potential", "40,40,1,1", "--K", "32", "--N", "0"});
  CHECK(r.code == kExitLocalization);
}

TEST_CASE("presets") {
  const auto thm31 = run({"verdict", "--preset", "thm31"});
  REQUIRE(thm31.code == kExitOk);
  CHECK(nlohmann::json::parse(thm31.out).at("conclusion") == "no-basis");

  const auto thm5 = run({"verdict", "--preset", "thm5"});
  REQUIRE(thm5.code == kExitOk);
  CHECK(nlohmann::json::parse(thm5.out).at("conclusion") == "no-basis");

  const auto prop20 = run({"verdict", "--preset", "prop20"});
  REQUIRE(prop20.code == kExitOk);
  CHECK(nlohmann::json::parse(prop20.out).at("conclusion") == "contains-basis");
}

TEST_CASE("flags override the config file, which overrides the preset") {
  const std::string path = "hillwalk_cli_test_config.json";
  {
    std::ofstream f(path);
    f << R"({"potential": "1,2,1,1", "bc": "per+", "range": "1:6"})";
  }
  const auto from_file = run({"verdict", "--preset", "thm31", "--config", path, "--criterion", "C1"});
  REQUIRE(from_file.code == kExitOk);
  const auto j = nlohmann::json::parse(from_file.out);
  CHECK(j.at("delta").at("indices") == nlohmann::json::array({2, 4, 6}));
  CHECK(j.at("rows")[0].at("value").get<double>() == doctest::Approx(4.0).epsilon(0.05));

  const auto flagged =
      run({"verdict", "--config", path, "--criterion", "C1", "--range", "2:2"});
  REQUIRE(flagged.code == kExitOk);
  CHECK(nlohmann::json::parse(flagged.out).at("rows").size() == 1);
  std::remove(path.c_str());
}

TEST_CASE("verify suite and its negative control") {
  const auto ok = run({"verify", "--precision", "64"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(ok.out.find("m = 40") != std::string::npos);

  const auto bad = run({"verify", "--perturb", "1/1000"});
  CHECK(bad.code == kExitFailure);
  CHECK(bad.out.find("FAIL  shell-zero closed form") != std::string::npos);
}

TEST_CASE("reports are byte-stable") {
  const std::vector<std::string> args{"beta", "--potential", "1,1,1,3", "--range", "2:9",
                                      "--format", "json", "--z", "1/3+i"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("output file") {
  const std::string path = "hillwalk_cli_test_out.csv";
  const auto r = run({"beta", "--potential", "1,1,1,1", "--n-list", "2", "--out", path});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("n,beta_plus", 0) == 0);
  std::remove(path.c_str());
}
