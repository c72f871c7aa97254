#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <omp.h>

#include "fiberscope/types.hpp"

namespace fiberscope {

/// Execution lane for the data-parallel sweeps. jobs == 1 is the serial
/// reference path (kept for testing and benchmarking against the OpenMP
/// lane); jobs == 0 uses every hardware thread.
struct ExecPolicy {
  int jobs = 0;
  bool serial() const { return jobs == 1; }
  int threads() const { return jobs <= 0 ? omp_get_max_threads() : jobs; }
};

/// Runs body(0..count-1). Every work item must be independent and write only
/// to its own slots; results are then identical on both lanes.
template <class F>
void par_for(std::size_t count, const ExecPolicy& pol, F&& body) {
  if (pol.serial() || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  const int nt = pol.threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
  for (long long i = 0; i < static_cast<long long>(count); ++i)
    body(static_cast<std::size_t>(i));
}

/// Same, but exceptions get captured per item and the lowest-index one is
/// rethrown after the join (they must not escape an OpenMP region).
template <class F>
void par_for_checked(std::size_t count, const ExecPolicy& pol, F&& body) {
  std::vector<std::string> what(count);
  std::vector<unsigned char> bad(count, 0);
  par_for(count, pol, [&](std::size_t i) {
    try {
      body(i);
    } catch (const std::exception& e) {
      bad[i] = 1;
      what[i] = e.what();
    } catch (...) {
      bad[i] = 1;
      what[i] = "unknown error";
    }
  });
  for (std::size_t i = 0; i < count; ++i)
    if (bad[i]) throw TrackError(what[i]);
}

}  // namespace fiberscope
