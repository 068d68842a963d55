#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "weyl/cli.hpp"

using namespace weyl;
using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int code;
  Json doc;
  std::string err;
};

RunResult run(const std::string& command, const std::string& problem,
              std::function<void(cli::Options&)> tweak = {}) {
  cli::Options opt;
  opt.command = command;
  if (tweak) tweak(opt);
  std::ostringstream out, err;
  int code = cli::run_command(opt, problem, out, err);
  RunResult r{code, Json(), err.str()};
  if (!out.str().empty()) r.doc = Json::parse(out.str());
  return r;
}

const char* kUnitIdeal =
    "algebra A\nn 1\nl 1\norder deglex\ngen d1\ngen x1\n";

}  // namespace

TEST_CASE("janet command reduces the unit ideal to [\"1\"]") {
  RunResult r = run("janet", kUnitIdeal);
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.doc["output"]["basis"] == Json::array({"1"}));
  CHECK(r.doc["schema"] == "v1");
  CHECK(r.doc["status"] == "ok");
}

TEST_CASE("hilbert command tabulates the principal module") {
  RunResult r = run("hilbert", "algebra A\nn 1\nl 1\ngen d1\n",
                    [](cli::Options& o) { o.mmax = 6; });
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.doc["output"]["values"] == Json::array({1, 2, 3, 4, 5, 6, 7}));
}

TEST_CASE("saturate command strips the central factor") {
  RunResult r =
      run("saturate", "algebra hA\nn 1\nl 1\ngen x0*d1\n");
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.doc["output"]["exponent"] == 1);
  CHECK(r.doc["output"]["generators"] == Json::array({"d1"}));
}

TEST_CASE("nf command") {
  RunResult r = run("nf", "algebra A\nn 1\nl 1\ngen d1\n",
                    [](cli::Options& o) { o.element = "x1*d1 + 1"; });
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.doc["output"]["normal_form"] == "1");
}

TEST_CASE("solve exit codes distinguish unsolvable from solved") {
  const char* solvable =
      "algebra hA\nn 1\nl 1\ngen x0\nrhs x0^3\n";
  RunResult ok = run("solve", solvable);
  CHECK(ok.code == cli::kExitOk);
  CHECK(ok.doc["output"]["particular"] == "x0^2");

  const char* impossible =
      "algebra hA\nn 1\nl 1\ngen x0^2\nrhs x1\n";
  RunResult bad = run("solve", impossible);
  CHECK(bad.code == cli::kExitUnsolvable);
  CHECK(bad.doc["output"]["status"] == "unsolvable");
}

TEST_CASE("resource caps map to exit code 2") {
  RunResult r = run("janet", "algebra A\nn 1\nl 1\ngen d1^2 - x1\ngen x1*d1\n",
                    [](cli::Options& o) { o.cap_degree = 1; });
  CHECK(r.code == cli::kExitResource);
}

TEST_CASE("usage errors map to exit code 1") {
  RunResult r = run("janet", "algebra A\nn 1\n");
  CHECK(r.code == cli::kExitUsage);
  RunResult r2 = run("frobnicate", kUnitIdeal);
  CHECK(r2.code == cli::kExitUsage);
  RunResult r3 = run("nf", kUnitIdeal);  // missing --element
  CHECK(r3.code == cli::kExitUsage);
}

TEST_CASE("kernel command emits a verified vector") {
  RunResult r = run("kernel", "algebra hA\nn 1\nl 2\ngen [x1, d1]\n");
  REQUIRE(r.code == cli::kExitOk);
  std::string z = r.doc["output"]["vector"];
  Ambient V{Algebra::homogenized, 1, 2};
  Element zv = parse_vector(z, V);
  Element x1 = parse_element("x1", V.scalar());
  Element d1 = parse_element("d1", V.scalar());
  CHECK((multiply(x1, zv.component(0)) + multiply(d1, zv.component(1)))
            .is_zero());
}

TEST_CASE("macaulay command") {
  RunResult r = run("macaulay", "algebra hA\nn 1\nl 1\ngen x0\n");
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.doc["output"]["summands"][0]["constants"] ==
        Json::array({1, 1, 1, 0}));
}

TEST_CASE("cones command") {
  RunResult r = run("cones", "algebra A\nn 2\nl 1\ngen x2\n",
                    [](cli::Options& o) { o.zmax = 5; });
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.doc["output"]["hilbert"] == Json::array({1, 2, 3, 4, 5, 6}));
}

TEST_CASE("outputs re-parse and runs are deterministic") {
  RunResult a = run("janet", kUnitIdeal);
  RunResult b = run("janet", kUnitIdeal);
  a.doc.erase("timing_ms");
  b.doc.erase("timing_ms");
  CHECK(a.doc.dump() == b.doc.dump());
  // basis strings parse back as generators
  Ambient amb{Algebra::weyl, 1, 1};
  for (const auto& s : a.doc["output"]["basis"])
    CHECK(!parse_vector(s.get<std::string>(), amb).is_zero());
}
