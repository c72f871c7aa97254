#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fiberscope/fiber.hpp"
#include "fiberscope/parallel.hpp"
#include "fiberscope/types.hpp"

namespace fiberscope {

struct TrackerConfig {
  double initial_step = 0.0;   // arc-length step; 0 = auto (circle radius / 16)
  double min_step = 1e-7;
  double newton_tol = 1e-12;   // corrector residual target, relative
  int max_newton = 8;
  double match_tol = 1e-6;     // endpoint match radius, relative
  double prox_factor = 0.05;   // exclusion radius, fraction of d_min
  double circle_factor = 0.3;  // loop circle radius, fraction of d_min
  uint64_t seed = 0;

  void validate() const;
};

struct PathSegment {
  enum class Kind { Line, Arc };
  Kind kind = Kind::Line;
  Complex a{};       // start (lines and arcs)
  Complex b{};       // line end
  Complex center{};  // arc data
  double radius = 0.0;
  double theta0 = 0.0;
  double dtheta = 0.0;  // signed, counterclockwise positive

  Complex at(double s) const;  // s in [0,1]
  Complex end() const { return at(1.0); }
  double length() const;
};

PathSegment line_segment(Complex a, Complex b);
PathSegment arc_segment(Complex center, double radius, double theta0,
                        double dtheta);

struct PlanePath {
  std::vector<PathSegment> segs;

  Complex start() const;
  Complex end() const;
  double length() const;
};

/// Signed winding number of the path around p (discrete argument sum; an
/// integer up to sampling error for closed paths).
double winding_number(const PlanePath& path, Complex p);

/// Which side the approach takes around a grazed branch-value disc.
enum class DetourSide { Shorter, Ccw, Cw };

/// A loop based at `base`: approach segment toward the target stopping on a
/// circle of radius circle_factor * d_min (for Zero: 0.5 * min |finite
/// value|), one full counterclockwise circle, and the reversed approach. The
/// approach detours along the boundary of the exclusion disc of every other
/// branch value, so the loop winds once around the target and zero times
/// around everything else.
PlanePath build_loop(const CVec& z, const BranchValue& target, Complex base,
                     const TrackerConfig& cfg,
                     DetourSide side = DetourSide::Shorter);

/// Radial excursion to |y_1| = 2 |base| plus a full counterclockwise circle;
/// the independent route to the Infinity permutation.
PlanePath big_circle_loop(Complex base);

struct SheetPermutation {
  std::vector<uint32_t> map;  // map[start sheet] = end sheet

  uint32_t size() const { return static_cast<uint32_t>(map.size()); }
  bool is_identity() const;
  bool is_involution() const;
  int fixed_points() const;
  std::vector<int> cycle_type() const;  // descending lengths
  static SheetPermutation identity(uint32_t degree);
  SheetPermutation inverse() const;
  bool operator==(const SheetPermutation& o) const { return map == o.map; }
};

/// apply `first`, then `second`.
SheetPermutation compose(const SheetPermutation& second,
                         const SheetPermutation& first);

struct TrackStats {
  long long steps = 0;
  long long rejections = 0;
  double max_residual = 0.0;  // scaled eval_S residual over corrected points

  void merge(const TrackStats& o);
};

/// Continues the whole fiber along the path by tangent prediction and Newton
/// correction at fixed y_1 on the square system
///   y_i^2 - y_n^2 = z_i / y_1 (i = 2..n-1),  y_n^2 = y_1^2 - z_1 / y_1.
/// `start` must be the canonical fiber at path.start(). Returns the tracked
/// endpoints (tagged with matched canonical sheets, in start order) and the
/// start->end sheet permutation.
std::pair<std::vector<FiberPoint>, SheetPermutation> track(
    const CVec& z, const PlanePath& path, const std::vector<FiberPoint>& start,
    const TrackerConfig& cfg, TrackStats* stats = nullptr,
    const ExecPolicy& exec = {});

/// One permutation per finite branch value (branch_values order), then Zero,
/// then Infinity. Infinity is computed both as the inverse of the ordered
/// product of the others (by increasing loop argument) and by tracking the
/// big circle; disagreement throws TrackError.
std::vector<std::pair<BranchValue, SheetPermutation>> monodromy_generators(
    const CVec& z, const TrackerConfig& cfg, TrackStats* stats = nullptr,
    const ExecPolicy& exec = {});

/// Orbit count of the generated group on sheet indices (union-find).
int orbit_count(const std::vector<SheetPermutation>& perms, int degree);

struct RamificationProfile {
  BranchValue point;
  std::vector<int> cycle_type;  // descending, sums to the degree
};

/// Riemann-Hurwitz: 2g - 2 = degree * (-2) + sum over cycles (length - 1);
/// punctures = #cycles(Zero) + #cycles(Infinity). Exact integer arithmetic;
/// throws TrackError if the genus fails to be a nonnegative integer.
std::pair<long long, long long> riemann_hurwitz(
    const std::vector<RamificationProfile>& profiles, int degree);

long long genus_formula_value(int n);      // (3n-6) 2^{n-3} + 1
long long punctures_formula_value(int n);  // 3 * 2^{n-2}

struct MonodromyReport {
  int n = 0;
  CVec z;
  int degree = 0;
  int orbits = 0;
  long long genus_numeric = 0;
  long long genus_formula = 0;
  long long punctures_numeric = 0;
  long long punctures_formula = 0;
  std::vector<RamificationProfile> profiles;
  double max_residual = 0.0;
  TrackStats stats;
};

MonodromyReport fibration_report(const CVec& z, const TrackerConfig& cfg,
                                 const ExecPolicy& exec = {});

}  // namespace fiberscope
