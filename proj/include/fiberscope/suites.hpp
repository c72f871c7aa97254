#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fiberscope/monodromy.hpp"
#include "fiberscope/parallel.hpp"
#include "fiberscope/polysys.hpp"
#include "fiberscope/types.hpp"

namespace fiberscope {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::vector<int> ns{3, 4, 5, 6};
  bool ns_given = false;
  std::optional<CVec> z_explicit;
  int random_count = 0;
  bool seed_given = false;
  uint64_t seed = 0;
  double tol_mem = kTolMem;
  double tol_res = kTolRes;
  double tol_rank = kTolRank;
  TrackerConfig tracker{};
  ExecPolicy exec{};
  std::string out_path;
  std::string format = "json";
  // sweep sizes, per case
  int map_samples = 10000;
  int det_draws = 10000;
  int rank_samples = 1000;
};

/// "4" or "3..6" (inclusive).
std::vector<int> parse_n_spec(const std::string& spec);

/// Applies defaults (a bare --seed implies one random z draw per n when a
/// suite needs z), then validates. Throws ConfigError.
RunConfig normalize_config(RunConfig rc, bool needs_z);

/// The (n, z) pairs a z-driven suite runs over, sorted by n then by z
/// lexicographically (real, imaginary per coordinate).
std::vector<std::pair<int, CVec>> select_z_cases(const RunConfig& rc);

struct CaseResult {
  std::string name;
  bool pass = true;
  Json data;
};

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::vector<CaseResult> cases;
  double wall_ms = 0.0;
};

SuiteResult run_fibration_suite(const RunConfig& rc);
SuiteResult run_jacobians_suite(const RunConfig& rc);
SuiteResult run_determinant_suite(const RunConfig& rc);
SuiteResult run_maps_suite(const RunConfig& rc);

/// names drawn from {fibration, jacobians, determinant, maps}.
std::vector<SuiteResult> run_suites(const RunConfig& rc,
                                    const std::vector<std::string>& names);

Json report_json(const RunConfig& rc, const std::string& command,
                 const std::vector<SuiteResult>& suites);
std::string report_csv(const std::vector<SuiteResult>& suites);

// Reusable sweep kernels; the benchmark compares their serial and OpenMP
// lanes and the tests pin lane-for-lane equality.

struct DetSweepResult {
  long long draws = 0;
  double max_rel_err = 0.0;
  bool pass = true;
};
/// structured_det vs det_oracle over every admissible column i of the n-case,
/// draws_per_column seeded draws each (one in 16 with a zeroed diagonal a_k).
DetSweepResult det_sweep(int n, int draws_per_column, uint64_t seed,
                         const ExecPolicy& exec);

struct RankSweepResult {
  long long samples = 0;
  long long failures = 0;   // samples with numeric_rank != n-1
  double min_gap = 0.0;     // smallest retained/discarded singular value gap
};
/// rank(M1) over seeded Y samples; vanish_coord = 0 for generic points, else
/// the paper coordinate in 2..n pinned to zero.
RankSweepResult m1_rank_sweep(int n, int vanish_coord, int samples,
                              uint64_t seed, double tol_rank,
                              const ExecPolicy& exec);

/// Max relative deviation between the analytic Jacobians and central finite
/// differences (step 1e-6) over seeded points.
double jacobian_fd_error(int n, int samples, uint64_t seed,
                         const ExecPolicy& exec);

}  // namespace fiberscope
