// Command-line front end: runs the verification suites and writes a
// machine-readable report. Exit codes: 0 all suites pass, 1 verification
// failure, 2 configuration error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fiberscope/complex_io.hpp"
#include "fiberscope/suites.hpp"

namespace {

using namespace fiberscope;

struct CliOptions {
  std::string n_spec;
  std::string z_csv;
  int random_count = -1;
  uint64_t seed = 0;
  bool seed_given = false;
  double tol_mem = -1, tol_res = -1, tol_rank = -1, match_tol = -1;
  double step = -1;
  std::string out_path;
  std::string format = "json";
  int jobs = 0;
};

void add_common_options(CLI::App* cmd, CliOptions& o) {
  cmd->add_option("--n", o.n_spec, "dimension n, or inclusive range lo..hi");
  cmd->add_option("--z", o.z_csv, "explicit z as comma-separated a+bi values");
  cmd->add_option("--random", o.random_count, "seeded random z draws per n");
  cmd->add_option("--seed", o.seed, "rng seed")->each([&](const std::string&) {
    o.seed_given = true;
  });
  cmd->add_option("--tol-mem", o.tol_mem, "membership margin (relative)");
  cmd->add_option("--tol-res", o.tol_res, "residual gate (relative)");
  cmd->add_option("--tol-rank", o.tol_rank, "singular value cutoff (relative)");
  cmd->add_option("--match-tol", o.match_tol, "sheet match radius (relative)");
  cmd->add_option("--step", o.step, "tracker initial arc-length step");
  cmd->add_option("--out", o.out_path, "report file (default: stdout)");
  cmd->add_option("--format", o.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--jobs", o.jobs,
                  "worker threads (0 = all cores, 1 = serial)");
}

RunConfig to_run_config(const CliOptions& o) {
  RunConfig rc;
  if (!o.n_spec.empty()) {
    rc.ns = parse_n_spec(o.n_spec);
    rc.ns_given = true;
  }
  if (!o.z_csv.empty()) rc.z_explicit = parse_complex_list(o.z_csv);
  if (o.random_count >= 0) rc.random_count = o.random_count;
  rc.seed = o.seed;
  rc.seed_given = o.seed_given;
  if (o.tol_mem > 0) rc.tol_mem = o.tol_mem;
  if (o.tol_res > 0) rc.tol_res = o.tol_res;
  if (o.tol_rank > 0) rc.tol_rank = o.tol_rank;
  if (o.match_tol > 0) rc.tracker.match_tol = o.match_tol;
  if (o.step > 0) rc.tracker.initial_step = o.step;
  rc.out_path = o.out_path;
  rc.format = o.format;
  rc.exec.jobs = o.jobs;
  return rc;
}

void emit_report(const RunConfig& rc, const std::string& command,
                 const std::vector<SuiteResult>& suites) {
  std::string payload;
  if (rc.format == "csv")
    payload = report_csv(suites);
  else
    payload = report_json(rc, command, suites).dump(2) + "\n";
  if (rc.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(rc.out_path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file " + rc.out_path);
  out << payload;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical monodromy and Jacobian verification for a fibered "
               "family of plane curves"};
  app.require_subcommand(1);
  CliOptions opt;

  const std::vector<std::string> suite_names = {"fibration", "jacobians",
                                                "determinant", "maps"};
  for (const auto& name : suite_names)
    add_common_options(app.add_subcommand(name, name + " suite"), opt);
  add_common_options(app.add_subcommand("all", "every suite"), opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const std::string command = app.get_subcommands().front()->get_name();
    const RunConfig rc = to_run_config(opt);
    const std::vector<std::string> selected =
        (command == "all") ? suite_names : std::vector<std::string>{command};
    const std::vector<SuiteResult> suites = run_suites(rc, selected);
    emit_report(rc, command, suites);

    bool pass = true;
    for (const auto& s : suites) {
      pass = pass && s.pass;
      for (const auto& c : s.cases)
        if (!c.pass)
          std::cerr << "FAIL " << s.name << " / " << c.name << "\n";
    }
    return pass ? 0 : 1;
  } catch (const fiberscope::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const fiberscope::TrackError& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return 1;
  }
}
