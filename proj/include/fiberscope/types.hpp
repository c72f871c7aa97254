#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fiberscope {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

inline constexpr double kPi = 3.14159265358979323846;

// Default gates. All of them are relative to coordinate magnitudes; integer
// decisions (ranks, genus, counts) sit far above these floors.
inline constexpr double kTolMem = 1e-9;    // membership margin
inline constexpr double kTolRes = 1e-10;   // polynomial residual
inline constexpr double kTolRank = 1e-8;   // singular value cutoff

/// Malformed input or run configuration. The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A numerical verification step gave up (Newton divergence, ambiguous sheet
/// match, disagreeing monodromy routes). The CLI maps this to exit code 1.
struct TrackError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool all_finite(const CVec& v) {
  for (const Complex& c : v)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return true;
}

inline double inf_norm(const CVec& v) {
  double m = 0.0;
  for (const Complex& c : v) m = std::max(m, std::abs(c));
  return m;
}

/// max(1, |v|_inf); the scale every relative gate is measured against.
inline double coord_scale(const CVec& v) { return std::max(1.0, inf_norm(v)); }

inline double dist(const CVec& a, const CVec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace fiberscope
