#include <doctest.h>

#include "scissors/exact/error.hpp"
#include "scissors/report/commands.hpp"
#include "scissors/report/suites.hpp"

using namespace scissors;
using namespace scissors::report;

TEST_CASE("sha256") {
  // FIPS 180-2 test vectors
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("digest ignores timing only") {
  Report r;
  r.command = "x";
  r.results["v"] = 1;
  auto d = report_digest(r);
  r.timing_ms = 123.5;
  CHECK(report_digest(r) == d);
  CHECK(report_json(r)["digest"] == d);
  CHECK(report_json(r)["schema_version"] == kSchemaVersion);
  r.seed = 1;
  CHECK(report_digest(r) != d);
  r.seed = 0;
  r.results["v"] = 2;
  CHECK(report_digest(r) != d);
}

TEST_CASE("suites") {
  CHECK(suite_names().size() == 11);
  CHECK_THROWS_AS(run_suite("nope", 0, std::nullopt), Error);
  try {
    run_suite("nope", 0, std::nullopt);
  } catch (const Error& e) {
    CHECK(exit_code(e.kind()) == 2);
  }
  auto a = run_suite("phi-boundary", 7, 6), b = run_suite("phi-boundary", 7, 6);
  CHECK(a.pass);
  CHECK(a.results == b.results);
  CHECK(a.results["cases"] == 6);
  // a case depends only on (seed, index)
  auto c = run_suite("sd-homotopy", 3, 5), d = run_suite("sd-homotopy", 3, 2);
  CHECK(c.results["table"][1] == d.results["table"][1]);
  for (const auto& s : {"torus", "hochschild", "hkr", "ses-audit", "bar-shapiro"}) CHECK_MESSAGE(run_suite(s, 0, {}).pass, s);
}

TEST_CASE("commands") {
  Options opt;
  auto h = cmd_hochschild("quat", opt);
  CHECK(h.results["HH"] == nlohmann::json::array({1, 0, 0}));
  opt.max_degree = 3;
  auto g = cmd_homology_group("Z/4", "trivialZ", opt);
  CHECK(g.results["homology"] == nlohmann::json::array({"Z", "Z/4", "0", "Z/4"}));
  auto text = render_text(h);
  CHECK(text.find("HH: (1, 0, 0)") != std::string::npos);
  CHECK(text.find("digest: " + report_digest(h)) != std::string::npos);
  CHECK_THROWS_AS(cmd_polytope_info("/nonexistent.json", opt), Error);
  CHECK_THROWS_AS(cmd_hochschild("octonions", opt), Error);
}
