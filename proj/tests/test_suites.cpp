#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fiberscope/complex_io.hpp"
#include "fiberscope/suites.hpp"

using namespace fiberscope;

namespace {

RunConfig small_config() {
  RunConfig rc;
  rc.ns = {3};
  rc.ns_given = true;
  rc.seed = 7;
  rc.seed_given = true;
  rc.random_count = 1;
  rc.map_samples = 500;
  rc.det_draws = 200;
  rc.rank_samples = 100;
  return rc;
}

Json strip_wall(Json j) {
  if (j.is_object()) {
    j.erase("wall_ms");
    for (auto& [k, v] : j.items()) v = strip_wall(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_wall(v);
  }
  return j;
}

}  // namespace

TEST_CASE("complex literals round trip") {
  CHECK(parse_complex("1+0i") == Complex(1, 0));
  CHECK(parse_complex("-4.5-2.25i") == Complex(-4.5, -2.25));
  CHECK(parse_complex("3") == Complex(3, 0));
  CHECK(parse_complex("2i") == Complex(0, 2));
  CHECK(parse_complex("-i") == Complex(0, -1));
  CHECK(parse_complex("1e-3+2e-4i") == Complex(1e-3, 2e-4));
  CHECK(parse_complex(format_complex(Complex(0.1, -0.3))) == Complex(0.1, -0.3));
  CHECK(format_complex(Complex(1, 0)) == "1+0i");
  CHECK(parse_complex_list("1+0i,2+0i") == CVec{Complex(1, 0), Complex(2, 0)});
  CHECK_THROWS_AS(parse_complex("fish"), ConfigError);
  CHECK_THROWS_AS(parse_complex(""), ConfigError);
}

TEST_CASE("n-spec parsing") {
  CHECK(parse_n_spec("4") == std::vector<int>{4});
  CHECK(parse_n_spec("3..6") == std::vector<int>{3, 4, 5, 6});
  CHECK_THROWS_AS(parse_n_spec("6..3"), ConfigError);
  CHECK_THROWS_AS(parse_n_spec("x"), ConfigError);
}

TEST_CASE("config validation") {
  {
    RunConfig rc = small_config();
    rc.ns = {2};
    CHECK_THROWS_AS(normalize_config(rc, false), ConfigError);
  }
  {
    RunConfig rc = small_config();
    rc.z_explicit = CVec{Complex(1, 0), Complex(1, 0)};  // violates Z
    CHECK_THROWS_AS(normalize_config(rc, true), ConfigError);
  }
  {
    RunConfig rc = small_config();
    rc.z_explicit = CVec{Complex(1, 0), Complex(2, 0)};  // n = 3, matches --n 3
    CHECK_NOTHROW(normalize_config(rc, true));
    rc.ns = {4};
    CHECK_THROWS_AS(normalize_config(rc, true), ConfigError);
  }
  {
    RunConfig rc = small_config();
    rc.random_count = 0;
    rc.seed_given = false;
    CHECK_THROWS_AS(normalize_config(rc, true), ConfigError);  // no z source
    CHECK_NOTHROW(normalize_config(rc, false));
    rc.seed_given = true;  // a bare seed implies one draw per n
    const RunConfig norm = normalize_config(rc, true);
    CHECK(norm.random_count == 1);
  }
  {
    RunConfig rc = small_config();
    rc.format = "xml";
    CHECK_THROWS_AS(normalize_config(rc, false), ConfigError);
  }
}

TEST_CASE("z case selection is sorted and seeded") {
  RunConfig rc = small_config();
  rc.ns = {3, 4};
  rc.random_count = 3;
  const RunConfig norm = normalize_config(rc, true);
  const auto cases = select_z_cases(norm);
  REQUIRE(cases.size() == 6);
  for (std::size_t k = 0; k + 1 < cases.size(); ++k)
    CHECK(cases[k].first <= cases[k + 1].first);
  const auto again = select_z_cases(norm);
  for (std::size_t k = 0; k < cases.size(); ++k)
    CHECK(cases[k].second == again[k].second);
}

TEST_CASE("fibration suite on the pinned z") {
  RunConfig rc = small_config();
  rc.z_explicit = CVec{Complex(1, 0), Complex(2, 0)};
  const SuiteResult s = run_fibration_suite(rc);
  CHECK(s.pass);
  REQUIRE(s.cases.size() == 1);
  CHECK(s.cases[0].data["genus_numeric"] == 4);
  CHECK(s.cases[0].data["punctures_numeric"] == 6);
  CHECK(s.cases[0].data["orbits"] == 1);
  CHECK(s.cases[0].name == "n=3 z=1+0i,2+0i");
}

TEST_CASE("jacobians, determinant and maps suites pass on a small run") {
  RunConfig rc = small_config();
  CHECK(run_jacobians_suite(rc).pass);
  CHECK(run_maps_suite(rc).pass);
  const SuiteResult det = run_determinant_suite(rc);
  CHECK(det.pass);
  REQUIRE(det.cases.size() == 10);  // n = 4..12 plus the fixed example
  CHECK(det.cases.back().data["structured"] == "14+0i");
}

TEST_CASE("suite failures flip the pass flags") {
  RunConfig rc = small_config();
  rc.z_explicit = CVec{Complex(1, 0), Complex(2, 0)};
  rc.tol_res = 1e-30;  // unreachable residual gate
  const SuiteResult s = run_fibration_suite(rc);
  CHECK_FALSE(s.pass);
}

TEST_CASE("json report: schema shape and determinism") {
  RunConfig rc = small_config();
  const auto suites1 = run_suites(rc, {"determinant", "maps"});
  const auto suites2 = run_suites(rc, {"determinant", "maps"});
  const Json j1 = report_json(rc, "all", suites1);
  const Json j2 = report_json(rc, "all", suites2);
  CHECK(j1["schema"] == "fiberscope/1");
  CHECK(j1["config"]["command"] == "all");
  CHECK(j1["config"]["z"] == "random");
  CHECK(j1["summary"]["pass"] == true);
  CHECK(j1.contains("suites"));
  CHECK(strip_wall(j1).dump() == strip_wall(j2).dump());
}

TEST_CASE("csv report shape") {
  RunConfig rc = small_config();
  const auto suites = run_suites(rc, {"maps"});
  const std::string csv = report_csv(suites);
  CHECK(csv.rfind("suite,case,pass,detail\n", 0) == 0);
  CHECK(csv.find("maps,") != std::string::npos);
  CHECK(csv.find(",true,") != std::string::npos);
}
