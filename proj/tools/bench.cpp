// Compares the serial reference lane against the OpenMP lane for the three
// heavy kernels and checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "fiberscope/arrangement.hpp"
#include "fiberscope/monodromy.hpp"
#include "fiberscope/suites.hpp"

using namespace fiberscope;

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double time_ms(F&& fn) {
  const auto t0 = Clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void report_row(const std::string& name, double serial_ms, double parallel_ms,
                bool equal) {
  std::printf("%-32s %10.1f %12.1f %8.2fx   %s\n", name.c_str(), serial_ms,
              parallel_ms, serial_ms / parallel_ms, equal ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fiberscope kernel benchmark: serial reference vs OpenMP"};
  int jobs = 0;
  int monodromy_n = 5;
  int det_n = 12;
  int det_draws = 10000;
  int rank_samples = 20000;
  app.add_option("--jobs", jobs, "threads for the parallel lane (0 = all)");
  app.add_option("--monodromy-n", monodromy_n, "dimension for the tracking run");
  app.add_option("--det-n", det_n, "dimension for the determinant sweep");
  app.add_option("--det-draws", det_draws, "draws per column");
  app.add_option("--rank-samples", rank_samples, "M1 rank samples");
  CLI11_PARSE(app, argc, argv);

  const ExecPolicy serial{1};
  ExecPolicy parallel{jobs == 1 ? 0 : jobs};
  std::printf("threads: serial=1 parallel=%d\n\n", parallel.threads());
  std::printf("%-32s %10s %12s %9s   %s\n", "kernel", "serial_ms",
              "parallel_ms", "speedup", "equal");

  {
    const CVec z = canonical_z(monodromy_n);
    const TrackerConfig cfg;
    MonodromyReport a, b;
    const double ts = time_ms([&] { a = fibration_report(z, cfg, serial); });
    const double tp = time_ms([&] { b = fibration_report(z, cfg, parallel); });
    bool equal = a.genus_numeric == b.genus_numeric &&
                 a.punctures_numeric == b.punctures_numeric &&
                 a.orbits == b.orbits && a.stats.steps == b.stats.steps &&
                 a.max_residual == b.max_residual;
    for (std::size_t k = 0; k < a.profiles.size(); ++k)
      equal = equal && a.profiles[k].cycle_type == b.profiles[k].cycle_type;
    report_row("monodromy n=" + std::to_string(monodromy_n), ts, tp, equal);
  }

  {
    DetSweepResult a, b;
    const double ts =
        time_ms([&] { a = det_sweep(det_n, det_draws, 42, serial); });
    const double tp =
        time_ms([&] { b = det_sweep(det_n, det_draws, 42, parallel); });
    const bool equal = a.max_rel_err == b.max_rel_err && a.draws == b.draws;
    report_row("determinant n=" + std::to_string(det_n), ts, tp, equal);
  }

  {
    RankSweepResult a, b;
    const double ts = time_ms(
        [&] { a = m1_rank_sweep(6, 0, rank_samples, 42, kTolRank, serial); });
    const double tp = time_ms(
        [&] { b = m1_rank_sweep(6, 0, rank_samples, 42, kTolRank, parallel); });
    const bool equal = a.failures == b.failures && a.min_gap == b.min_gap;
    report_row("M1 rank n=6", ts, tp, equal);
  }

  return 0;
}
