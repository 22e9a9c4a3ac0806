#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "f4prolong/cli/cli.hpp"
#include "f4prolong/cli/suites.hpp"

using namespace f4prolong;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("rational lists") {
  const RatVector v = parse_rational_list("1/2, 0,-3");
  REQUIRE(v.size() == 3);
  CHECK(v[0] == Rational(1, 2));
  CHECK(v[2] == -3);
  CHECK_THROWS_AS(parse_rational_list(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational_list("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational_list("1,"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational_list("1/0"), std::invalid_argument);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"verify", "nothing"}).code == 2);
  CHECK(run({"verify", "roots", "--point", "1/0"}).code == 2);
  CHECK(run({"flag", "--coords", "1,2"}).code == 2);
  CHECK(run({"integrate", "--controls", "0,0,1,0,0,0,1,0"}).code == 2);
  CHECK(run({"integrate", "--step", "0"}).code == 2);
}

TEST_CASE("verify roots as JSON") {
  const Run r = run({"--json", "verify", "roots"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "f4prolong/1");
  CHECK(j["summary"]["fail"] == 0);
  CHECK(run({"--json", "verify", "roots"}).out == r.out);
}

TEST_CASE("subcommands") {
  const Run roots = run({"roots", "--list"});
  CHECK(roots.code == 0);
  CHECK(roots.out.find("24 positive roots") != std::string::npos);
  const Run flag = run({"flag", "--coords", "0,0,0,0,0,0,0,0,0"});
  CHECK(flag.code == 0);
  CHECK(flag.out.find("null flag: yes") != std::string::npos);
  const Run integ = run({"--json", "integrate", "--step", "0.01"});
  CHECK(integ.code == 0);
  CHECK(nlohmann::json::parse(integ.out)["max_constraint_drift"] == 0.0);
  const Run model = run({"export-model"});
  CHECK(nlohmann::json::parse(model.out)["frame"].size() == 15);
  const Run table = run({"--json", "prolong", "--table"});
  CHECK(nlohmann::json::parse(table.out)["entries"].size() == 92);
}

TEST_CASE("suite point dimension is validated") {
  SuiteOptions opt;
  opt.point = Point(7, Rational(0));
  CHECK_THROWS_AS(run_suite("prolong", opt), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("nope", SuiteOptions{}), std::invalid_argument);
}
