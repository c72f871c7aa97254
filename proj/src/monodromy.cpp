#include "fiberscope/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace fiberscope {

void TrackerConfig::validate() const {
  if (initial_step < 0.0 || min_step <= 0.0 || newton_tol <= 0.0 ||
      max_newton < 1 || match_tol <= 0.0 || prox_factor <= 0.0 ||
      circle_factor <= 0.0)
    throw ConfigError("TrackerConfig: all parameters must be positive");
  if (initial_step > 0.0 && min_step >= initial_step)
    throw ConfigError("TrackerConfig: min_step must be below initial_step");
  if (circle_factor > 0.45)
    throw ConfigError("TrackerConfig: circle_factor must be <= 0.45");
  if (prox_factor > circle_factor / 2.0)
    throw ConfigError("TrackerConfig: prox_factor must be <= circle_factor/2");
}

Complex PathSegment::at(double s) const {
  if (kind == Kind::Line) return a + s * (b - a);
  return center + std::polar(radius, theta0 + s * dtheta);
}

double PathSegment::length() const {
  if (kind == Kind::Line) return std::abs(b - a);
  return radius * std::abs(dtheta);
}

PathSegment line_segment(Complex a, Complex b) {
  PathSegment s;
  s.kind = PathSegment::Kind::Line;
  s.a = a;
  s.b = b;
  return s;
}

PathSegment arc_segment(Complex center, double radius, double theta0,
                        double dtheta) {
  PathSegment s;
  s.kind = PathSegment::Kind::Arc;
  s.center = center;
  s.radius = radius;
  s.theta0 = theta0;
  s.dtheta = dtheta;
  s.a = center + std::polar(radius, theta0);
  return s;
}

Complex PlanePath::start() const {
  if (segs.empty()) throw ConfigError("PlanePath: empty path");
  return segs.front().a;
}

Complex PlanePath::end() const {
  if (segs.empty()) throw ConfigError("PlanePath: empty path");
  return segs.back().end();
}

double PlanePath::length() const {
  double L = 0.0;
  for (const auto& s : segs) L += s.length();
  return L;
}

double winding_number(const PlanePath& path, Complex p) {
  double total = 0.0;
  for (const auto& seg : path.segs) {
    // coarse pass to find the closest approach, then sample fine enough that
    // successive argument increments stay well below pi
    double dmin = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 256; ++k)
      dmin = std::min(dmin, std::abs(seg.at(k / 256.0) - p));
    if (dmin <= 0.0) return std::numeric_limits<double>::quiet_NaN();
    const int samples = std::clamp(
        static_cast<int>(6.0 * seg.length() / dmin) + 1, 256, 1 << 20);
    Complex prev = seg.at(0.0) - p;
    for (int k = 1; k <= samples; ++k) {
      const Complex cur = seg.at(double(k) / samples) - p;
      total += std::arg(cur / prev);
      prev = cur;
    }
  }
  return total / (2.0 * kPi);
}

namespace {

PathSegment reversed(const PathSegment& s) {
  if (s.kind == PathSegment::Kind::Line) return line_segment(s.b, s.a);
  return arc_segment(s.center, s.radius, s.theta0 + s.dtheta, -s.dtheta);
}

struct DiscCrossing {
  double t1, t2;  // entry/exit parameters along the line
  Complex center;
};

// Straight run from A to B that walks around the radius-rho disc of every
// obstacle the segment would cross.
std::vector<PathSegment> route(Complex A, Complex B,
                               const std::vector<Complex>& obstacles,
                               double rho, DetourSide side) {
  std::vector<PathSegment> out;
  const Complex w = B - A;
  const double len = std::abs(w);
  if (len <= 1e-15) return out;

  std::vector<DiscCrossing> events;
  for (const Complex& o : obstacles) {
    // projection parameter of o onto the line through A,B
    const double t0 =
        ((o - A).real() * w.real() + (o - A).imag() * w.imag()) / (len * len);
    const Complex foot = A + t0 * w;
    const double dperp = std::abs(foot - o);
    if (dperp >= rho) continue;
    const double half = std::sqrt(rho * rho - dperp * dperp) / len;
    const double t1 = t0 - half, t2 = t0 + half;
    if (t2 <= 0.0 || t1 >= 1.0) continue;
    if (t1 <= 0.0 || t2 >= 1.0)
      throw ConfigError("route: endpoint inside an exclusion disc");
    events.push_back({t1, t2, o});
  }
  std::sort(events.begin(), events.end(),
            [](const DiscCrossing& x, const DiscCrossing& y) {
              return x.t1 < y.t1;
            });
  Complex cur = A;
  double prev_t2 = 0.0;
  for (const auto& ev : events) {
    if (ev.t1 < prev_t2)
      throw ConfigError("route: overlapping exclusion discs");
    prev_t2 = ev.t2;
    const Complex p1 = A + ev.t1 * w;
    const Complex p2 = A + ev.t2 * w;
    if (std::abs(p1 - cur) > 1e-15) out.push_back(line_segment(cur, p1));
    const double th1 = std::arg(p1 - ev.center);
    const double th2 = std::arg(p2 - ev.center);
    double dccw = th2 - th1;
    while (dccw <= 0.0) dccw += 2.0 * kPi;
    const double dcw = dccw - 2.0 * kPi;
    double dtheta = 0.0;
    switch (side) {
      case DetourSide::Ccw: dtheta = dccw; break;
      case DetourSide::Cw: dtheta = dcw; break;
      case DetourSide::Shorter: dtheta = (dccw <= -dcw) ? dccw : dcw; break;
    }
    out.push_back(arc_segment(ev.center, rho, th1, dtheta));
    cur = p2;
  }
  if (std::abs(B - cur) > 1e-15) out.push_back(line_segment(cur, B));
  return out;
}

double min_finite_modulus(const std::vector<BranchValue>& bvs) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& bv : bvs)
    if (bv.finite()) m = std::min(m, std::abs(bv.value));
  return m;
}

}  // namespace

PlanePath build_loop(const CVec& z, const BranchValue& target, Complex base,
                     const TrackerConfig& cfg, DetourSide side) {
  cfg.validate();
  if (target.kind == BranchKind::Infinity)
    throw ConfigError("build_loop: use big_circle_loop for infinity");
  const auto bvs = branch_values(z);
  const double d_min = proximity_radius(z, 1.0);
  const double tau = cfg.prox_factor * d_min;

  const Complex c = target.value;
  const double r = target.finite() ? cfg.circle_factor * d_min
                                   : 0.5 * min_finite_modulus(bvs);

  std::vector<Complex> obstacles;
  for (const auto& bv : bvs)
    if (bv.finite() && std::abs(bv.value - c) > 1e-14)
      obstacles.push_back(bv.value);
  if (target.kind != BranchKind::Zero) obstacles.push_back(Complex(0.0, 0.0));

  if (std::abs(base - c) <= r + 4.0 * tau)
    throw ConfigError("build_loop: base too close to the target");
  for (const Complex& o : obstacles)
    if (std::abs(base - o) <= 4.0 * tau)
      throw ConfigError("build_loop: base too close to a branch value");

  const Complex q = c + r * (base - c) / std::abs(base - c);
  PlanePath path;
  path.segs = route(base, q, obstacles, tau, side);
  path.segs.push_back(arc_segment(c, r, std::arg(q - c), 2.0 * kPi));
  std::vector<PathSegment> approach(path.segs.begin(), path.segs.end() - 1);
  for (auto it = approach.rbegin(); it != approach.rend(); ++it)
    path.segs.push_back(reversed(*it));
  return path;
}

PlanePath big_circle_loop(Complex base) {
  const double R = std::abs(base);
  if (R <= 0.0) throw ConfigError("big_circle_loop: base at origin");
  PlanePath path;
  path.segs.push_back(line_segment(base, 2.0 * base));
  path.segs.push_back(arc_segment(Complex(0.0, 0.0), 2.0 * R, std::arg(base),
                                  2.0 * kPi));
  path.segs.push_back(line_segment(2.0 * base, base));
  return path;
}

bool SheetPermutation::is_identity() const {
  for (uint32_t i = 0; i < size(); ++i)
    if (map[i] != i) return false;
  return true;
}

bool SheetPermutation::is_involution() const {
  for (uint32_t i = 0; i < size(); ++i)
    if (map[map[i]] != i) return false;
  return true;
}

int SheetPermutation::fixed_points() const {
  int k = 0;
  for (uint32_t i = 0; i < size(); ++i)
    if (map[i] == i) ++k;
  return k;
}

std::vector<int> SheetPermutation::cycle_type() const {
  std::vector<bool> seen(size(), false);
  std::vector<int> cycles;
  for (uint32_t i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (uint32_t j = i; !seen[j]; j = map[j]) {
      seen[j] = true;
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.rbegin(), cycles.rend());
  return cycles;
}

SheetPermutation SheetPermutation::identity(uint32_t degree) {
  SheetPermutation p;
  p.map.resize(degree);
  std::iota(p.map.begin(), p.map.end(), 0u);
  return p;
}

SheetPermutation SheetPermutation::inverse() const {
  SheetPermutation p;
  p.map.resize(size());
  for (uint32_t i = 0; i < size(); ++i) p.map[map[i]] = i;
  return p;
}

SheetPermutation compose(const SheetPermutation& second,
                         const SheetPermutation& first) {
  if (second.size() != first.size())
    throw ConfigError("compose: degree mismatch");
  SheetPermutation p;
  p.map.resize(first.size());
  for (uint32_t i = 0; i < first.size(); ++i) p.map[i] = second.map[first.map[i]];
  return p;
}

void TrackStats::merge(const TrackStats& o) {
  steps += o.steps;
  rejections += o.rejections;
  max_residual = std::max(max_residual, o.max_residual);
}

namespace {

// Corrector system at fixed y1 in the unknowns u = (y_2,...,y_n):
//   F_k     = u_k^2 - u_last^2 - z_{k+2}/y1   (k = 0..m-2, paper i = k+2)
//   F_{m-1} = u_last^2 - y1^2 + z_1/y1
// The Jacobian is one quadratic row per unknown plus the shared u_last
// column, so each Newton step solves in O(m).
struct FiberTracker {
  const CVec& z;
  int n;
  int m;  // n - 1 unknowns

  explicit FiberTracker(const CVec& z_)
      : z(z_), n(static_cast<int>(z_.size()) + 1), m(n - 1) {}

  void residual(Complex y1, const CVec& u, CVec& r) const {
    const Complex inv_y1 = 1.0 / y1;
    const Complex last2 = u[m - 1] * u[m - 1];
    for (int k = 0; k + 1 < m; ++k)
      r[k] = u[k] * u[k] - last2 - z[k + 1] * inv_y1;
    r[m - 1] = last2 - y1 * y1 + z[0] * inv_y1;
  }

  double scale(Complex y1, const CVec& u) const {
    double s = 1.0 + std::norm(y1);
    for (const Complex& c : u) s = std::max(s, 1.0 + std::norm(c));
    return s;
  }

  // true once ||F||_inf <= tol * scale; the accumulated correction must stay
  // below `guard` (a sheet-jump tripwire).
  bool newton(Complex y1, CVec& u, const TrackerConfig& cfg, double guard,
              int& iters, double& resid_inf) const {
    CVec r(m);
    double moved = 0.0;
    for (iters = 0; iters <= cfg.max_newton; ++iters) {
      residual(y1, u, r);
      resid_inf = inf_norm(r);
      if (resid_inf <= cfg.newton_tol * scale(y1, u)) return true;
      if (iters == cfg.max_newton) break;
      const Complex ulast = u[m - 1];
      if (std::abs(ulast) < 1e-13) return false;
      const Complex dlast = -r[m - 1] / (2.0 * ulast);
      double step = std::abs(dlast);
      for (int k = 0; k + 1 < m; ++k) {
        if (std::abs(u[k]) < 1e-13) return false;
        const Complex dk = (2.0 * ulast * dlast - r[k]) / (2.0 * u[k]);
        step = std::max(step, std::abs(dk));
        u[k] += dk;
      }
      u[m - 1] += dlast;
      moved += step;
      if (moved > guard) return false;
    }
    return false;
  }

  // du/dy1 by implicit differentiation of the corrector system.
  bool tangent(Complex y1, const CVec& u, CVec& du) const {
    const Complex ulast = u[m - 1];
    if (std::abs(ulast) < 1e-13) return false;
    const Complex inv_sq = 1.0 / (y1 * y1);
    const Complex dlast = (2.0 * y1 + z[0] * inv_sq) / (2.0 * ulast);
    for (int k = 0; k + 1 < m; ++k) {
      if (std::abs(u[k]) < 1e-13) return false;
      du[k] = (2.0 * ulast * dlast - z[k + 1] * inv_sq) / (2.0 * u[k]);
    }
    du[m - 1] = dlast;
    return true;
  }
};

std::string format_y1(Complex y1) {
  std::ostringstream os;
  os << y1.real() << (y1.imag() < 0 ? "" : "+") << y1.imag() << "i";
  return os.str();
}

// Continues one fiber point along the whole path. Returns (y_2..y_n) at the
// endpoint; throws TrackError on stall.
CVec track_one(const FiberTracker& sys, const PlanePath& path, CVec u,
               const TrackerConfig& cfg, double init_step, TrackStats& st,
               const std::string& ctx) {
  for (std::size_t si = 0; si < path.segs.size(); ++si) {
    const PathSegment& seg = path.segs[si];
    const double L = seg.length();
    if (L <= 1e-15) continue;
    const double cap = std::max(std::min(8.0 * init_step, L), cfg.min_step);
    double h = std::min(init_step, L);
    double s = 0.0;
    CVec du(sys.m), utry(sys.m);
    while (s < 1.0) {
      const double snext = std::min(1.0, s + h / L);
      const Complex y1c = seg.at(s);
      const Complex y1n = seg.at(snext);
      utry = u;
      double tangent_norm = 0.0;
      if (sys.tangent(y1c, u, du)) {
        const Complex dy1 = y1n - y1c;
        for (int k = 0; k < sys.m; ++k) {
          utry[k] = u[k] + du[k] * dy1;
          tangent_norm = std::max(tangent_norm, std::abs(du[k]));
        }
      }
      const double guard = 4.0 * std::abs(y1n - y1c) * (1.0 + tangent_norm) +
                           1e-6 * (1.0 + inf_norm(u));
      int iters = 0;
      double resid = 0.0;
      if (sys.newton(y1n, utry, cfg, guard, iters, resid)) {
        u = std::move(utry);
        utry.resize(sys.m);
        s = snext;
        ++st.steps;
        // scaled eval_S residual: |S| = |y1| * |F|
        const double s_resid =
            std::abs(y1n) * resid / (1.0 + std::pow(std::abs(y1n), 3));
        st.max_residual = std::max(st.max_residual, s_resid);
        if (iters <= 3) h = std::min(1.5 * h, cap);
      } else {
        ++st.rejections;
        h *= 0.5;
        if (h < cfg.min_step)
          throw TrackError(ctx + ": Newton stalled at segment " +
                           std::to_string(si) + ", y1=" + format_y1(y1n));
      }
    }
  }
  return u;
}

SheetPermutation match_to_fiber(const std::vector<CVec>& endpoints,
                                const std::vector<FiberPoint>& canonical,
                                const TrackerConfig& cfg,
                                const std::string& ctx) {
  const std::size_t count = canonical.size();
  double scale = 1.0;
  for (const auto& fp : canonical) scale = std::max(scale, inf_norm(fp.y));

  SheetPermutation perm;
  perm.map.assign(count, 0);
  std::vector<bool> used(count, false);
  for (std::size_t s = 0; s < count; ++s) {
    double d1 = std::numeric_limits<double>::infinity(), d2 = d1;
    std::size_t j1 = 0;
    for (std::size_t j = 0; j < count; ++j) {
      // endpoints hold (y_2..y_n); skip the shared y_1 coordinate
      double acc = 0.0;
      for (std::size_t k = 0; k + 1 < canonical[j].y.size(); ++k)
        acc += std::norm(endpoints[s][k] - canonical[j].y[k + 1]);
      const double d = std::sqrt(acc);
      if (d < d1) {
        d2 = d1;
        d1 = d;
        j1 = j;
      } else if (d < d2) {
        d2 = d;
      }
    }
    if (d1 > cfg.match_tol * scale)
      throw TrackError(ctx + ": endpoint matches no canonical fiber point");
    if (d2 < 10.0 * d1)
      throw TrackError(ctx + ": ambiguous sheet match");
    if (used[j1]) throw TrackError(ctx + ": sheet match not injective");
    used[j1] = true;
    perm.map[s] = static_cast<uint32_t>(j1);
  }
  return perm;
}

double default_loop_step(const CVec& z, const TrackerConfig& cfg) {
  return cfg.circle_factor * proximity_radius(z, 1.0) / 16.0;
}

}  // namespace

std::pair<std::vector<FiberPoint>, SheetPermutation> track(
    const CVec& z, const PlanePath& path, const std::vector<FiberPoint>& start,
    const TrackerConfig& cfg, TrackStats* stats, const ExecPolicy& exec) {
  cfg.validate();
  const FiberTracker sys(z);
  const int count = sheet_count(sys.n);
  if (static_cast<int>(start.size()) != count)
    throw ConfigError("track: start fiber has wrong cardinality");
  const Complex origin = path.start();
  for (int s = 0; s < count; ++s) {
    if (start[s].sheet != static_cast<uint32_t>(s))
      throw ConfigError("track: start fiber must be in canonical sheet order");
    if (std::abs(start[s].y[0] - origin) > 1e-9 * (1.0 + std::abs(origin)))
      throw ConfigError("track: start fiber does not sit over path start");
  }

  const double h0 = cfg.initial_step > 0.0 ? cfg.initial_step
                                           : default_loop_step(z, cfg);
  std::vector<CVec> endpoints(count);
  std::vector<TrackStats> st(count);
  par_for_checked(count, exec, [&](std::size_t s) {
    CVec u(start[s].y.begin() + 1, start[s].y.end());
    endpoints[s] = track_one(sys, path, std::move(u), cfg, h0, st[s],
                             "track sheet " + std::to_string(s));
  });

  TrackStats total;
  for (const auto& x : st) total.merge(x);
  if (stats) stats->merge(total);

  const auto canonical =
      fiber_at(z, path.end(), proximity_radius(z, cfg.prox_factor));
  SheetPermutation perm = match_to_fiber(endpoints, canonical, cfg, "track");

  std::vector<FiberPoint> end_fiber(count);
  for (int s = 0; s < count; ++s) {
    CVec y(sys.n);
    y[0] = path.end();
    for (int k = 0; k + 1 < sys.n; ++k) y[k + 1] = endpoints[s][k];
    end_fiber[s] = {std::move(y), perm.map[s]};
  }
  return {std::move(end_fiber), std::move(perm)};
}

std::vector<std::pair<BranchValue, SheetPermutation>> monodromy_generators(
    const CVec& z, const TrackerConfig& cfg, TrackStats* stats,
    const ExecPolicy& exec) {
  cfg.validate();
  const FiberTracker sys(z);
  const int count = sheet_count(sys.n);
  const auto bvs = branch_values(z);
  const Complex base = base_point(z);
  const auto fiber0 = fiber_at(z, base, proximity_radius(z, cfg.prox_factor));
  const double d_min = proximity_radius(z, 1.0);

  // finite loops, the Zero loop, then the big circle
  std::vector<PlanePath> loops;
  std::vector<double> steps0;
  std::vector<std::string> names;
  std::vector<const BranchValue*> loop_bv;
  for (const auto& bv : bvs) {
    if (bv.kind == BranchKind::Infinity) continue;
    loops.push_back(build_loop(z, bv, base, cfg));
    const double r = bv.finite() ? cfg.circle_factor * d_min
                                 : 0.5 * min_finite_modulus(bvs);
    steps0.push_back(cfg.initial_step > 0.0 ? cfg.initial_step : r / 16.0);
    names.push_back("loop " + describe(bv));
    loop_bv.push_back(&bv);
  }
  loops.push_back(big_circle_loop(base));
  steps0.push_back(cfg.initial_step > 0.0
                       ? cfg.initial_step
                       : cfg.circle_factor * d_min / 16.0);
  names.push_back("big circle");
  loop_bv.push_back(nullptr);

  const std::size_t nloops = loops.size();
  std::vector<CVec> endpoints(nloops * count);
  std::vector<TrackStats> st(nloops * count);
  par_for_checked(nloops * count, exec, [&](std::size_t t) {
    const std::size_t li = t / count;
    const std::size_t s = t % count;
    CVec u(fiber0[s].y.begin() + 1, fiber0[s].y.end());
    endpoints[t] = track_one(sys, loops[li], std::move(u), cfg, steps0[li],
                             st[t], names[li] + ", sheet " + std::to_string(s));
  });

  TrackStats total;
  for (const auto& x : st) total.merge(x);
  if (stats) stats->merge(total);

  std::vector<SheetPermutation> perms(nloops);
  for (std::size_t li = 0; li < nloops; ++li) {
    std::vector<CVec> ends(endpoints.begin() + li * count,
                           endpoints.begin() + (li + 1) * count);
    perms[li] = match_to_fiber(ends, fiber0, cfg, names[li]);
  }

  // Infinity, route 1: inverse of the product of the other loops taken by
  // increasing argument of (branch value - base).
  std::vector<std::size_t> order(nloops - 1);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double va = std::arg(loop_bv[a]->value - base);
    const double vb = std::arg(loop_bv[b]->value - base);
    if (va != vb) return va < vb;
    return a < b;
  });
  SheetPermutation product = SheetPermutation::identity(count);
  for (std::size_t k : order) product = compose(perms[k], product);
  const SheetPermutation inf_from_relation = product.inverse();

  // Infinity, route 2: the tracked big circle. Both must agree.
  const SheetPermutation inf_from_circle = perms.back().inverse();
  if (!(inf_from_relation == inf_from_circle))
    throw TrackError("monodromy: the two infinity computations disagree");

  std::vector<std::pair<BranchValue, SheetPermutation>> out;
  std::size_t li = 0;
  for (const auto& bv : bvs) {
    if (bv.kind == BranchKind::Infinity)
      out.emplace_back(bv, inf_from_relation);
    else
      out.emplace_back(bv, perms[li++]);
  }
  return out;
}

int orbit_count(const std::vector<SheetPermutation>& perms, int degree) {
  if (perms.empty()) throw ConfigError("orbit_count: no permutations");
  std::vector<int> parent(degree);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : perms) {
    if (static_cast<int>(p.size()) != degree)
      throw ConfigError("orbit_count: degree mismatch");
    for (int i = 0; i < degree; ++i) {
      const int a = find(i), b = find(static_cast<int>(p.map[i]));
      if (a != b) parent[a] = b;
    }
  }
  int orbits = 0;
  for (int i = 0; i < degree; ++i)
    if (find(i) == i) ++orbits;
  return orbits;
}

std::pair<long long, long long> riemann_hurwitz(
    const std::vector<RamificationProfile>& profiles, int degree) {
  long long ram_sum = 0;
  const RamificationProfile* zero = nullptr;
  const RamificationProfile* inf = nullptr;
  for (const auto& p : profiles) {
    long long sum = 0;
    for (int len : p.cycle_type) {
      if (len < 1) throw ConfigError("riemann_hurwitz: bad cycle length");
      ram_sum += len - 1;
      sum += len;
    }
    if (sum != degree)
      throw ConfigError("riemann_hurwitz: cycle type does not sum to degree");
    if (p.point.kind == BranchKind::Zero) zero = &p;
    if (p.point.kind == BranchKind::Infinity) inf = &p;
  }
  if (!zero || !inf)
    throw ConfigError("riemann_hurwitz: profiles must cover 0 and infinity");
  const long long two_g = 2 - 2ll * degree + ram_sum;  // = 2g
  if (two_g % 2 != 0 || two_g < 0)
    throw TrackError("riemann_hurwitz: genus is not a nonnegative integer");
  const long long punctures = static_cast<long long>(zero->cycle_type.size()) +
                              static_cast<long long>(inf->cycle_type.size());
  return {two_g / 2, punctures};
}

long long genus_formula_value(int n) {
  if (n < 3) throw ConfigError("genus_formula_value: n >= 3");
  return (3ll * n - 6) * (1ll << (n - 3)) + 1;
}

long long punctures_formula_value(int n) {
  if (n < 3) throw ConfigError("punctures_formula_value: n >= 3");
  return 3ll * (1ll << (n - 2));
}

MonodromyReport fibration_report(const CVec& z, const TrackerConfig& cfg,
                                 const ExecPolicy& exec) {
  MonodromyReport rep;
  rep.n = static_cast<int>(z.size()) + 1;
  rep.z = z;
  rep.degree = sheet_count(rep.n);

  const auto gens = monodromy_generators(z, cfg, &rep.stats, exec);
  std::vector<SheetPermutation> perms;
  for (const auto& [bv, perm] : gens) {
    rep.profiles.push_back({bv, perm.cycle_type()});
    perms.push_back(perm);
  }
  rep.orbits = orbit_count(perms, rep.degree);
  const auto [genus, punctures] = riemann_hurwitz(rep.profiles, rep.degree);
  rep.genus_numeric = genus;
  rep.punctures_numeric = punctures;
  rep.genus_formula = genus_formula_value(rep.n);
  rep.punctures_formula = punctures_formula_value(rep.n);
  rep.max_residual = rep.stats.max_residual;
  return rep;
}

}  // namespace fiberscope
