#include "fiberscope/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>

#include "fiberscope/arrangement.hpp"
#include "fiberscope/complex_io.hpp"
#include "fiberscope/fiber.hpp"
#include "fiberscope/rng.hpp"

namespace fiberscope {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// rng stream salts, one per sweep family
constexpr uint64_t kStreamZ = 0x5a01;
constexpr uint64_t kStreamDet = 0x5a02;
constexpr uint64_t kStreamRank = 0x5a03;
constexpr uint64_t kStreamFd = 0x5a04;
constexpr uint64_t kStreamMoebius = 0x5a05;
constexpr uint64_t kStreamCone = 0x5a06;
constexpr uint64_t kStreamExp = 0x5a07;

bool lex_less(const CVec& a, const CVec& b) {
  for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) {
    if (a[k].real() != b[k].real()) return a[k].real() < b[k].real();
    if (a[k].imag() != b[k].imag()) return a[k].imag() < b[k].imag();
  }
  return a.size() < b.size();
}

}  // namespace

std::vector<int> parse_n_spec(const std::string& spec) {
  const auto parse_int = [](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ConfigError("bad integer '" + s + "' in --n");
    }
  };
  const auto dots = spec.find("..");
  if (dots == std::string::npos) return {parse_int(spec)};
  const int lo = parse_int(spec.substr(0, dots));
  const int hi = parse_int(spec.substr(dots + 2));
  if (lo > hi) throw ConfigError("empty range in --n");
  std::vector<int> ns;
  for (int n = lo; n <= hi; ++n) ns.push_back(n);
  return ns;
}

RunConfig normalize_config(RunConfig rc, bool needs_z) {
  if (rc.ns.empty()) throw ConfigError("no dimensions selected");
  std::sort(rc.ns.begin(), rc.ns.end());
  rc.ns.erase(std::unique(rc.ns.begin(), rc.ns.end()), rc.ns.end());
  for (int n : rc.ns)
    if (n < 3) throw ConfigError("n >= 3 required");
  if (rc.tol_mem <= 0.0 || rc.tol_res <= 0.0 || rc.tol_rank <= 0.0)
    throw ConfigError("tolerances must be positive");
  if (rc.random_count < 0) throw ConfigError("--random must be nonnegative");
  if (rc.format != "json" && rc.format != "csv")
    throw ConfigError("--format must be json or csv");
  rc.tracker.seed = rc.seed;
  rc.tracker.validate();

  if (rc.z_explicit) {
    const CVec& z = *rc.z_explicit;
    if (z.size() < 2) throw ConfigError("--z needs at least 2 coordinates");
    if (!all_finite(z) || !membership(Space::Z, z, rc.tol_mem))
      throw ConfigError("--z violates Z membership");
    const int n = static_cast<int>(z.size()) + 1;
    if (rc.ns_given && !(rc.ns.size() == 1 && rc.ns[0] == n))
      throw ConfigError("--n conflicts with the dimension fixed by --z");
    rc.ns = {n};
  } else if (needs_z && rc.random_count == 0) {
    if (!rc.seed_given)
      throw ConfigError("provide --z or --random (a bare --seed draws one z per n)");
    rc.random_count = 1;
  }
  return rc;
}

std::vector<std::pair<int, CVec>> select_z_cases(const RunConfig& rc) {
  std::vector<std::pair<int, CVec>> cases;
  if (rc.z_explicit) {
    cases.emplace_back(static_cast<int>(rc.z_explicit->size()) + 1,
                       *rc.z_explicit);
    return cases;
  }
  for (int n : rc.ns) {
    std::vector<CVec> draws(rc.random_count);
    for (int k = 0; k < rc.random_count; ++k) {
      Rng rng = sub_rng(rc.seed, kStreamZ + 16 * uint64_t(n), uint64_t(k));
      draws[k] = sample_z(n, rng, 0.1);
    }
    std::sort(draws.begin(), draws.end(), lex_less);
    for (auto& z : draws) cases.emplace_back(n, std::move(z));
  }
  return cases;
}

// ---------------------------------------------------------------------------
// sweep kernels

DetSweepResult det_sweep(int n, int draws_per_column, uint64_t seed,
                         const ExecPolicy& exec) {
  if (n < 3 || n > 12) throw ConfigError("det_sweep: n must be in 3..12");
  const int cols = n - 2;
  const std::size_t tasks = std::size_t(cols) * std::size_t(draws_per_column);
  std::vector<double> errs(tasks, 0.0);
  par_for(tasks, exec, [&](std::size_t t) {
    const int i = static_cast<int>(t / draws_per_column) + 2;
    const uint64_t k = t % draws_per_column;
    Rng rng = sub_rng(seed, kStreamDet + 4096 * uint64_t(n) + uint64_t(i), k);
    StructuredMatrix m;
    m.n = n;
    m.a.resize(n - 2);
    m.b.resize(n - 1);
    m.c.resize(n - 1);
    for (auto& v : m.a) v = rng.box(2.0, 2.0);
    for (auto& v : m.b) v = rng.box(2.0, 2.0);
    for (auto& v : m.c) v = rng.box(2.0, 2.0);
    if (k % 16 == 7) m.a[rng.next_u64() % (n - 2)] = 0.0;  // degenerate draws
    const Complex sd = structured_det(m, i);
    const Complex od = det_oracle(m.dense_without_column(i));
    errs[t] = std::abs(sd - od) /
              std::max({1.0, std::abs(sd), std::abs(od)});
  });
  DetSweepResult res;
  res.draws = static_cast<long long>(tasks);
  for (double e : errs) res.max_rel_err = std::max(res.max_rel_err, e);
  res.pass = res.max_rel_err <= 1e-9;
  return res;
}

RankSweepResult m1_rank_sweep(int n, int vanish_coord, int samples,
                              uint64_t seed, double tol_rank,
                              const ExecPolicy& exec) {
  const AffineSystem sys(n, canonical_z(n));
  std::vector<unsigned char> ok(samples, 0);
  std::vector<double> gaps(samples, 0.0);
  par_for(samples, exec, [&](std::size_t t) {
    Rng rng = sub_rng(seed, kStreamRank + 64 * uint64_t(n) + uint64_t(vanish_coord),
                      uint64_t(t));
    const CVec y = (vanish_coord == 0)
                       ? sample_y(n, rng)
                       : sample_y_vanishing(n, vanish_coord, rng);
    const CMatrix m1 = jacobian_M1(sys, y);
    ok[t] = (numeric_rank(m1, tol_rank) == n - 1) ? 1 : 0;
    gaps[t] = rank_gap(m1, tol_rank);
  });
  RankSweepResult res;
  res.samples = samples;
  res.min_gap = std::numeric_limits<double>::infinity();
  for (int t = 0; t < samples; ++t) {
    if (!ok[t]) ++res.failures;
    res.min_gap = std::min(res.min_gap, gaps[t]);
  }
  return res;
}

namespace {

template <class Eval>
CMatrix fd_jacobian(Eval&& eval, int rows, int vars, double h) {
  CMatrix m(rows, vars);
  for (int v = 0; v < vars; ++v) {
    const CVec plus = eval(v, h);
    const CVec minus = eval(v, -h);
    for (int r = 0; r < rows; ++r) m(r, v) = (plus[r] - minus[r]) / (2.0 * h);
  }
  return m;
}

double rel_matrix_err(const CMatrix& analytic, const CMatrix& fd) {
  const double scale = std::max(1.0, analytic.cwiseAbs().maxCoeff());
  return (analytic - fd).cwiseAbs().maxCoeff() / scale;
}

}  // namespace

double jacobian_fd_error(int n, int samples, uint64_t seed,
                         const ExecPolicy& exec) {
  const double h = 1e-6;
  std::vector<double> errs(samples, 0.0);
  par_for(samples, exec, [&](std::size_t t) {
    Rng rng = sub_rng(seed, kStreamFd + uint64_t(n), uint64_t(t));
    const CVec z = sample_z(n, rng);
    const AffineSystem sys(n, z);
    const CVec y = sample_y(n, rng);
    CVec x(n);
    for (auto& c : x) c = rng.annulus(0.5, 2.0);

    double err = 0.0;
    {
      // M1 is the Jacobian of f; eval_S = z - f, so d(eval_S)/dy = -M1.
      const CMatrix analytic = -jacobian_M1(sys, y);
      const CMatrix fd = fd_jacobian(
          [&](int v, double d) {
            CVec yv = y;
            yv[v] += d;
            return eval_S(sys, yv);
          },
          n - 1, n, h);
      err = std::max(err, rel_matrix_err(analytic, fd));
    }
    {
      const CMatrix analytic = jacobian_chart(sys, x);
      const int rows = static_cast<int>(analytic.rows());
      const CMatrix fd = fd_jacobian(
          [&](int v, double d) {
            if (v < n) {
              CVec xv = x;
              xv[v] += d;
              return eval_chart(sys, xv);
            }
            CVec zv = z;
            zv[v - n] += d;
            return eval_chart(AffineSystem(n, zv), x);
          },
          rows, 2 * n - 1, h);
      err = std::max(err, rel_matrix_err(analytic, fd));
    }
    {
      const CMatrix analytic = jacobian_B2(sys, x);
      const CMatrix fd = fd_jacobian(
          [&](int v, double d) {
            if (v < n) {
              CVec xv = x;
              xv[v] += d;
              return eval_B2_system(sys, xv);
            }
            CVec zv = z;
            zv[v - n] += d;
            return eval_B2_system(AffineSystem(n, zv), x);
          },
          n, 2 * n - 1, h);
      err = std::max(err, rel_matrix_err(analytic, fd));
    }
    errs[t] = err;
  });
  double out = 0.0;
  for (double e : errs) out = std::max(out, e);
  return out;
}

// ---------------------------------------------------------------------------
// kernel closed forms (displayed parametric solutions, fitted by projection
// onto the numerical null space)

namespace {

// chart variables ordered (x_0..x_{n-1}, z_1..z_{n-1})
std::vector<CVec> chart_kernel_closed_form(const AffineSystem& sys,
                                           const BoundaryPoint& p) {
  const int n = sys.n;
  const int vars = 2 * n - 1;
  std::vector<CVec> gens;
  CVec g(vars, Complex(0.0, 0.0));
  g[0] = 1.0;  // free x_0 direction
  gens.push_back(g);
  if (p.kind == BoundaryKind::B1) {
    for (int j = 1; j <= n - 1; ++j) {
      CVec gz(vars, Complex(0.0, 0.0));
      gz[n + (j - 1)] = 1.0;
      gens.push_back(gz);
    }
    return gens;
  }
  const Complex z1 = sys.z[0];
  {
    CVec gz(vars, Complex(0.0, 0.0));
    gz[n] = 1.0;  // u_1 = dz_1
    for (int i = 2; i <= n - 1; ++i)
      gz[i] = sys.z[i - 1] / (2.0 * p.x[i] * z1 * z1);
    gens.push_back(gz);
  }
  for (int j = 2; j <= n - 1; ++j) {
    CVec gz(vars, Complex(0.0, 0.0));
    gz[n + (j - 1)] = 1.0;  // u_j = dz_j
    gz[j] = -1.0 / (2.0 * p.x[j] * z1);
    gens.push_back(gz);
  }
  return gens;
}

std::vector<CVec> b2_kernel_closed_form(const AffineSystem& sys,
                                        const BoundaryPoint& p) {
  const int n = sys.n;
  const int vars = 2 * n - 1;
  const Complex z1 = sys.z[0];
  std::vector<CVec> gens;
  {
    CVec gz(vars, Complex(0.0, 0.0));
    gz[n] = 1.0;
    for (int i = 2; i <= n - 1; ++i)
      gz[i] = (2.0 * z1 - p.x[i] * p.x[i]) / (2.0 * p.x[i] * z1);
    gens.push_back(gz);
  }
  for (int j = 2; j <= n - 1; ++j) {
    CVec gz(vars, Complex(0.0, 0.0));
    gz[n + (j - 1)] = 1.0;
    gz[j] = -sys.z[j - 1] / (p.x[j] * z1);
    gens.push_back(gz);
  }
  return gens;
}

double span_residual(const CMatrix& basis, const CVec& g) {
  Eigen::VectorXcd v(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) v(k) = g[k];
  const Eigen::VectorXcd r = v - basis * (basis.adjoint() * v);
  return r.norm() / v.norm();
}

double max_span_residual(const CMatrix& basis, const std::vector<CVec>& gens) {
  double worst = 0.0;
  for (const auto& g : gens) worst = std::max(worst, span_residual(basis, g));
  return worst;
}

// rank of the projection of the null space onto the z coordinates
int kernel_z_projection_rank(const CMatrix& basis, int n, double tol_rank) {
  return numeric_rank(basis.bottomRows(n - 1), tol_rank);
}

}  // namespace

// ---------------------------------------------------------------------------
// suites

SuiteResult run_fibration_suite(const RunConfig& raw) {
  const auto t0 = Clock::now();
  const RunConfig rc = normalize_config(raw, true);
  SuiteResult out;
  out.name = "fibration";
  for (const auto& [n, z] : select_z_cases(rc)) {
    CaseResult cr;
    cr.name = "n=" + std::to_string(n) + " z=" + format_complex_list(z);
    try {
      const MonodromyReport rep = fibration_report(z, rc.tracker, rc.exec);
      Json profiles = Json::array();
      for (const auto& p : rep.profiles)
        profiles.push_back({{"branch", describe(p.point)},
                            {"cycles", p.cycle_type}});
      cr.pass = rep.genus_numeric == rep.genus_formula &&
                rep.punctures_numeric == rep.punctures_formula &&
                rep.orbits == 1 && rep.max_residual <= rc.tol_res;
      cr.data = Json{{"n", n},
                     {"degree", rep.degree},
                     {"orbits", rep.orbits},
                     {"genus_numeric", rep.genus_numeric},
                     {"genus_formula", rep.genus_formula},
                     {"punctures_numeric", rep.punctures_numeric},
                     {"punctures_formula", rep.punctures_formula},
                     {"max_residual", rep.max_residual},
                     {"steps", rep.stats.steps},
                     {"rejections", rep.stats.rejections},
                     {"profiles", profiles}};
    } catch (const TrackError& e) {
      cr.pass = false;
      cr.data = Json{{"error", e.what()}};
    } catch (const ConfigError& e) {
      cr.pass = false;
      cr.data = Json{{"error", e.what()}};
    }
    out.pass = out.pass && cr.pass;
    out.cases.push_back(std::move(cr));
  }
  out.wall_ms = ms_since(t0);
  return out;
}

SuiteResult run_jacobians_suite(const RunConfig& raw) {
  const auto t0 = Clock::now();
  const RunConfig rc = normalize_config(raw, true);
  SuiteResult out;
  out.name = "jacobians";

  for (int n : rc.ns) {
    std::vector<std::pair<std::string, int>> rank_cases;
    rank_cases.emplace_back("generic", 0);
    rank_cases.emplace_back("y_n=0", n);
    for (int i0 = 2; i0 <= n - 1; ++i0)
      rank_cases.emplace_back("y_" + std::to_string(i0) + "=0", i0);
    for (const auto& [label, vanish] : rank_cases) {
      const RankSweepResult sweep = m1_rank_sweep(
          n, vanish, rc.rank_samples, rc.seed, rc.tol_rank, rc.exec);
      CaseResult cr;
      cr.name = "n=" + std::to_string(n) + " M1 rank " + label;
      cr.pass = sweep.failures == 0;
      cr.data = Json{{"samples", sweep.samples},
                     {"failures", sweep.failures},
                     {"expected_rank", n - 1},
                     {"min_gap", sweep.min_gap}};
      out.pass = out.pass && cr.pass;
      out.cases.push_back(std::move(cr));
    }
    {
      const double err = jacobian_fd_error(n, 25, rc.seed, rc.exec);
      CaseResult cr;
      cr.name = "n=" + std::to_string(n) + " finite-difference guard";
      cr.pass = err <= 1e-4;
      cr.data = Json{{"max_rel_err", err}, {"gate", 1e-4}};
      out.pass = out.pass && cr.pass;
      out.cases.push_back(std::move(cr));
    }
  }

  for (const auto& [n, z] : select_z_cases(rc)) {
    CaseResult cr;
    cr.name = "n=" + std::to_string(n) + " z=" + format_complex_list(z) +
              " boundary kernels";
    const AffineSystem sys(n, z);
    const auto pts = enumerate_boundary(sys);
    int b1 = 0, b2 = 0;
    double max_resid = 0.0, min_gap = std::numeric_limits<double>::infinity();
    double max_span = 0.0;
    bool dims_ok = true, proj_ok = true;
    for (const auto& p : pts) {
      (p.kind == BoundaryKind::B1 ? b1 : b2) += 1;
      max_resid = std::max(max_resid, inf_norm(eval_chart(sys, p.x)));
      const CMatrix J = jacobian_chart(sys, p.x);
      const CMatrix K = kernel_basis(J, rc.tol_rank);
      dims_ok = dims_ok && (K.cols() == n);
      min_gap = std::min(min_gap, rank_gap(J, rc.tol_rank));
      proj_ok =
          proj_ok && (kernel_z_projection_rank(K, n, rc.tol_rank) == n - 1);
      max_span =
          std::max(max_span, max_span_residual(K, chart_kernel_closed_form(sys, p)));
      if (p.kind == BoundaryKind::B2) {
        const CMatrix J2 = jacobian_B2(sys, p.x);
        const CMatrix K2 = kernel_basis(J2, rc.tol_rank);
        dims_ok = dims_ok && (K2.cols() == n - 1);
        min_gap = std::min(min_gap, rank_gap(J2, rc.tol_rank));
        proj_ok =
            proj_ok && (kernel_z_projection_rank(K2, n, rc.tol_rank) == n - 1);
        max_span =
            std::max(max_span, max_span_residual(K2, b2_kernel_closed_form(sys, p)));
      }
    }
    const bool counts_ok = (b1 == (1 << (n - 1))) && (b2 == (1 << (n - 2)));
    cr.pass = counts_ok && dims_ok && proj_ok && max_resid <= 1e-12 &&
              max_span <= 1e-8;
    cr.data = Json{{"b1_points", b1},
                   {"b2_points", b2},
                   {"max_chart_residual", max_resid},
                   {"kernel_dims_ok", dims_ok},
                   {"kernel_z_projection_ok", proj_ok},
                   {"max_closed_form_residual", max_span},
                   {"min_gap", min_gap}};
    out.pass = out.pass && cr.pass;
    out.cases.push_back(std::move(cr));
  }
  out.wall_ms = ms_since(t0);
  return out;
}

SuiteResult run_determinant_suite(const RunConfig& raw) {
  const auto t0 = Clock::now();
  const RunConfig rc = normalize_config(raw, false);
  SuiteResult out;
  out.name = "determinant";
  for (int n = 4; n <= 12; ++n) {
    const DetSweepResult sweep = det_sweep(n, rc.det_draws, rc.seed, rc.exec);
    CaseResult cr;
    cr.name = "n=" + std::to_string(n) + " structured vs oracle";
    cr.pass = sweep.pass;
    cr.data = Json{{"draws", sweep.draws},
                   {"max_rel_err", sweep.max_rel_err},
                   {"gate", 1e-9}};
    out.pass = out.pass && cr.pass;
    out.cases.push_back(std::move(cr));
  }
  {
    // pinned example: n=4, i=2, a=(5,7), b=(1,3,6), c=(2,4,8) -> 14
    StructuredMatrix m;
    m.n = 4;
    m.a = {Complex(5, 0), Complex(7, 0)};
    m.b = {Complex(1, 0), Complex(3, 0), Complex(6, 0)};
    m.c = {Complex(2, 0), Complex(4, 0), Complex(8, 0)};
    const Complex sd = structured_det(m, 2);
    const Complex od = det_oracle(m.dense_without_column(2));
    CaseResult cr;
    cr.name = "fixed example n=4 i=2";
    cr.pass = std::abs(sd - Complex(14, 0)) <= 1e-12 &&
              std::abs(od - Complex(14, 0)) <= 1e-12;
    cr.data = Json{{"structured", format_complex(sd)},
                   {"oracle", format_complex(od)},
                   {"expected", "14+0i"}};
    out.pass = out.pass && cr.pass;
    out.cases.push_back(std::move(cr));
  }
  out.wall_ms = ms_since(t0);
  return out;
}

SuiteResult run_maps_suite(const RunConfig& raw) {
  const auto t0 = Clock::now();
  const RunConfig rc = normalize_config(raw, false);
  SuiteResult out;
  out.name = "maps";

  {
    const int count = rc.map_samples;
    std::vector<double> err(count), margin(count);
    par_for(count, rc.exec, [&](std::size_t t) {
      Rng rng = sub_rng(rc.seed, kStreamMoebius, uint64_t(t));
      Complex a;
      do {
        a = rng.box(3.0, 3.0);
      } while (std::abs(a) < 0.05 || std::abs(a - 1.0) < 0.05);
      const Complex v = moebius(a, MapDir::Forward);
      err[t] = std::abs(moebius(v, MapDir::Inverse) - a);
      margin[t] = std::min(std::abs(v - 1.0), std::abs(v + 1.0));
    });
    CaseResult cr;
    cr.name = "moebius round trip";
    double max_err = 0.0, min_margin = std::numeric_limits<double>::infinity();
    for (int t = 0; t < count; ++t) {
      max_err = std::max(max_err, err[t]);
      min_margin = std::min(min_margin, margin[t]);
    }
    cr.pass = max_err <= 1e-12 && min_margin > rc.tol_mem;
    cr.data = Json{{"samples", count},
                   {"max_round_trip_err", max_err},
                   {"min_margin_to_pm1", min_margin}};
    out.pass = out.pass && cr.pass;
    out.cases.push_back(std::move(cr));
  }

  for (int n : rc.ns) {
    const int count = rc.map_samples;
    std::vector<double> err(count);
    std::vector<unsigned char> member_ok(count, 0);
    par_for(count, rc.exec, [&](std::size_t t) {
      Rng rng = sub_rng(rc.seed, kStreamCone + uint64_t(n), uint64_t(t));
      const CVec w = sample_p(n, rng);
      const Complex lambda = rng.annulus(0.5, 2.0);
      const CVec y = cone_forward(w, lambda);
      member_ok[t] = membership(Space::Y, y, rc.tol_mem) ? 1 : 0;
      const auto [w2, l2] = cone_inverse(y);
      double e = std::abs(l2 - lambda);
      for (int k = 0; k < n; ++k) e = std::max(e, std::abs(w2[k] - w[k]));
      err[t] = e;
    });
    CaseResult cr;
    cr.name = "cone bijection n=" + std::to_string(n);
    double max_err = 0.0;
    long long bad = 0;
    for (int t = 0; t < count; ++t) {
      max_err = std::max(max_err, err[t]);
      if (!member_ok[t]) ++bad;
    }
    cr.pass = max_err <= 1e-12 && bad == 0;
    cr.data = Json{{"samples", count},
                   {"max_round_trip_err", max_err},
                   {"membership_failures", bad}};
    out.pass = out.pass && cr.pass;
    out.cases.push_back(std::move(cr));
  }

  for (int n : rc.ns) {
    const int count = rc.map_samples;
    std::vector<unsigned char> fwd_ok(count, 0), viol_ok(count, 0);
    par_for(count, rc.exec, [&](std::size_t t) {
      Rng rng = sub_rng(rc.seed, kStreamExp + uint64_t(n), uint64_t(t));
      const CVec u = sample_m(n, rng);
      fwd_ok[t] = membership(Space::N, exp_cover(u), rc.tol_mem) ? 1 : 0;
      // exact violation of one MBtilde inequation must land outside N
      CVec bad = u;
      const int mode = static_cast<int>(rng.next_u64() % 3);
      const std::size_t i = rng.next_u64() % n;
      std::size_t j = rng.next_u64() % n;
      if (n > 1)
        while (j == i) j = rng.next_u64() % n;
      const double m = double(rng.next_u64() % 5) - 2.0;
      if (mode == 0)
        bad[i] = std::round(bad[i].real());
      else if (mode == 1)
        bad[i] = bad[j] + m;
      else
        bad[i] = m - bad[j];
      viol_ok[t] = membership(Space::N, exp_cover(bad), rc.tol_mem) ? 0 : 1;
    });
    CaseResult cr;
    cr.name = "exp membership transport n=" + std::to_string(n);
    long long fwd_bad = 0, viol_bad = 0;
    for (int t = 0; t < count; ++t) {
      if (!fwd_ok[t]) ++fwd_bad;
      if (!viol_ok[t]) ++viol_bad;
    }
    cr.pass = fwd_bad == 0 && viol_bad == 0;
    cr.data = Json{{"samples", count},
                   {"member_transport_failures", fwd_bad},
                   {"violator_transport_failures", viol_bad}};
    out.pass = out.pass && cr.pass;
    out.cases.push_back(std::move(cr));
  }

  for (int n : rc.ns) {
    const AffineSystem sys(n, canonical_z(n));
    const auto pts = enumerate_boundary(sys);
    double max_resid = 0.0;
    bool shrink_ok = true;
    const PathOptions opt;
    for (const auto& p : pts) {
      double prev = std::numeric_limits<double>::infinity();
      for (int k = 0; k <= 5; ++k) {
        const double t = opt.eps / double(2 << k);  // eps/2 .. eps/64
        const CVec x = boundary_path(sys, p, t, opt);
        max_resid = std::max(max_resid, inf_norm(eval_chart(sys, x)));
        const double d = dist(x, p.x);
        shrink_ok = shrink_ok && d < prev && d <= 1.5 * t;
        prev = d;
      }
    }
    CaseResult cr;
    cr.name = "boundary path convergence n=" + std::to_string(n);
    cr.pass = max_resid <= 1e-10 && shrink_ok;
    cr.data = Json{{"boundary_points", pts.size()},
                   {"max_path_residual", max_resid},
                   {"endpoint_contraction_ok", shrink_ok}};
    out.pass = out.pass && cr.pass;
    out.cases.push_back(std::move(cr));
  }

  out.wall_ms = ms_since(t0);
  return out;
}

std::vector<SuiteResult> run_suites(const RunConfig& rc,
                                    const std::vector<std::string>& names) {
  std::vector<SuiteResult> out;
  for (const auto& name : names) {
    if (name == "fibration")
      out.push_back(run_fibration_suite(rc));
    else if (name == "jacobians")
      out.push_back(run_jacobians_suite(rc));
    else if (name == "determinant")
      out.push_back(run_determinant_suite(rc));
    else if (name == "maps")
      out.push_back(run_maps_suite(rc));
    else
      throw ConfigError("unknown suite '" + name + "'");
  }
  return out;
}

Json report_json(const RunConfig& rc, const std::string& command,
                 const std::vector<SuiteResult>& suites) {
  Json config{{"command", command},
              {"n", rc.ns},
              {"random", rc.random_count},
              {"seed", rc.seed},
              {"tolerances",
               {{"mem", rc.tol_mem},
                {"res", rc.tol_res},
                {"rank", rc.tol_rank},
                {"match", rc.tracker.match_tol}}},
              {"tracker",
               {{"initial_step", rc.tracker.initial_step},
                {"min_step", rc.tracker.min_step},
                {"newton_tol", rc.tracker.newton_tol},
                {"max_newton", rc.tracker.max_newton},
                {"prox_factor", rc.tracker.prox_factor},
                {"circle_factor", rc.tracker.circle_factor}}},
              {"jobs", rc.exec.jobs}};
  if (rc.z_explicit) {
    Json zs = Json::array();
    for (const Complex& c : *rc.z_explicit) zs.push_back(format_complex(c));
    config["z"] = zs;
  } else {
    config["z"] = "random";
  }

  Json jsuites = Json::array();
  int cases = 0, failed = 0;
  bool all_pass = true;
  for (const auto& s : suites) {
    Json jcases = Json::array();
    for (const auto& c : s.cases) {
      Json jc{{"name", c.name}, {"pass", c.pass}};
      jc.update(c.data);
      jcases.push_back(std::move(jc));
      ++cases;
      if (!c.pass) ++failed;
    }
    all_pass = all_pass && s.pass;
    jsuites.push_back(Json{{"name", s.name},
                           {"pass", s.pass},
                           {"wall_ms", s.wall_ms},
                           {"cases", std::move(jcases)}});
  }
  return Json{{"schema", "fiberscope/1"},
              {"config", std::move(config)},
              {"suites", std::move(jsuites)},
              {"summary",
               {{"pass", all_pass},
                {"suites_run", suites.size()},
                {"cases", cases},
                {"failed_cases", failed}}}};
}

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string report_csv(const std::vector<SuiteResult>& suites) {
  std::string out = "suite,case,pass,detail\n";
  for (const auto& s : suites)
    for (const auto& c : s.cases) {
      out += s.name;
      out += ',';
      out += csv_quote(c.name);
      out += ',';
      out += c.pass ? "true" : "false";
      out += ',';
      out += csv_quote(c.data.dump());
      out += '\n';
    }
  return out;
}

}  // namespace fiberscope
