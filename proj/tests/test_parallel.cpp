#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "fiberscope/arrangement.hpp"
#include "fiberscope/monodromy.hpp"
#include "fiberscope/parallel.hpp"
#include "fiberscope/suites.hpp"

using namespace fiberscope;

namespace {
const ExecPolicy kSerial{1};
const ExecPolicy kParallel{0};
}  // namespace

TEST_CASE("par_for fills identical slots on both lanes") {
  std::vector<double> a(1000), b(1000);
  par_for(a.size(), kSerial, [&](std::size_t i) { a[i] = std::sqrt(double(i)); });
  par_for(b.size(), kParallel, [&](std::size_t i) { b[i] = std::sqrt(double(i)); });
  CHECK(a == b);
}

TEST_CASE("par_for_checked rethrows the lowest-index failure") {
  try {
    par_for_checked(100, kParallel, [&](std::size_t i) {
      if (i % 7 == 3) throw TrackError("boom " + std::to_string(i));
    });
    FAIL("expected TrackError");
  } catch (const TrackError& e) {
    CHECK(std::string(e.what()) == "boom 3");
  }
}

TEST_CASE("determinant sweep: serial and parallel lanes agree bit for bit") {
  const DetSweepResult a = det_sweep(8, 2000, 42, kSerial);
  const DetSweepResult b = det_sweep(8, 2000, 42, kParallel);
  CHECK(a.draws == b.draws);
  CHECK(a.max_rel_err == b.max_rel_err);
  CHECK(a.pass);
}

TEST_CASE("rank sweep: serial and parallel lanes agree bit for bit") {
  const RankSweepResult a = m1_rank_sweep(6, 0, 2000, 42, kTolRank, kSerial);
  const RankSweepResult b = m1_rank_sweep(6, 0, 2000, 42, kTolRank, kParallel);
  CHECK(a.failures == b.failures);
  CHECK(a.min_gap == b.min_gap);
  CHECK(a.failures == 0);
}

TEST_CASE("fibration report: serial and parallel lanes agree") {
  const CVec z = canonical_z(4);
  const MonodromyReport a = fibration_report(z, {}, kSerial);
  const MonodromyReport b = fibration_report(z, {}, kParallel);
  CHECK(a.genus_numeric == 13);
  CHECK(a.punctures_numeric == 12);
  CHECK(a.genus_numeric == b.genus_numeric);
  CHECK(a.punctures_numeric == b.punctures_numeric);
  CHECK(a.orbits == b.orbits);
  CHECK(a.stats.steps == b.stats.steps);
  CHECK(a.stats.rejections == b.stats.rejections);
  CHECK(a.max_residual == b.max_residual);
  REQUIRE(a.profiles.size() == b.profiles.size());
  for (std::size_t k = 0; k < a.profiles.size(); ++k)
    CHECK(a.profiles[k].cycle_type == b.profiles[k].cycle_type);
}
