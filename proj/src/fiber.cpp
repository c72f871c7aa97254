#include "fiberscope/fiber.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "fiberscope/arrangement.hpp"

namespace fiberscope {

namespace {

void check_z(const CVec& z) {
  if (z.size() < 2) throw ConfigError("z must have at least 2 coordinates");
  if (!membership(Space::Z, z, 1e-12))
    throw ConfigError("z violates Z membership");
}

std::array<Complex, 3> cube_roots(Complex w) {
  const Complex r0 = std::pow(w, 1.0 / 3.0);  // principal
  const Complex rot = std::polar(1.0, 2.0 * kPi / 3.0);
  return {r0, r0 * rot, r0 * rot * rot};
}

}  // namespace

std::vector<BranchValue> branch_values(const CVec& z) {
  check_z(z);
  const int n = static_cast<int>(z.size()) + 1;
  std::vector<BranchValue> out;
  out.reserve(3 * (n - 1) + 2);
  {
    const auto roots = cube_roots(z[0]);
    for (int k = 0; k < 3; ++k)
      out.push_back({BranchKind::CubeRootZ1, 0, k, roots[k]});
  }
  for (int i = 2; i <= n - 1; ++i) {
    const auto roots = cube_roots(z[0] - z[i - 1]);
    for (int k = 0; k < 3; ++k)
      out.push_back({BranchKind::CubeRootDiff, i, k, roots[k]});
  }
  out.push_back({BranchKind::Zero, 0, 0, Complex(0.0, 0.0)});
  out.push_back({BranchKind::Infinity, 0, 0,
                 Complex(std::numeric_limits<double>::infinity(), 0.0)});
  return out;
}

std::vector<Complex> finite_branch_points(const std::vector<BranchValue>& bvs) {
  std::vector<Complex> pts;
  for (const auto& bv : bvs)
    if (bv.finite()) pts.push_back(bv.value);
  return pts;
}

double proximity_radius(const CVec& z, double factor) {
  const auto bvs = branch_values(z);
  std::vector<Complex> pts = finite_branch_points(bvs);
  pts.push_back(Complex(0.0, 0.0));
  double dmin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      dmin = std::min(dmin, std::abs(pts[i] - pts[j]));
  return factor * dmin;
}

int sheet_count(int n) {
  if (n < 3 || n > 25) throw ConfigError("sheet_count: n must be in 3..25");
  return 1 << (n - 1);
}

uint32_t sheet_flip_mask(int n, int c) {
  if (c < 2 || c > n) throw ConfigError("sheet_flip_mask: coordinate in 2..n");
  return 1u << (n - c);
}

int sheet_sign(int n, uint32_t sheet, int c) {
  return (sheet & sheet_flip_mask(n, c)) ? -1 : +1;
}

std::vector<FiberPoint> fiber_at(const CVec& z, Complex y1, double prox_tol) {
  check_z(z);
  const int n = static_cast<int>(z.size()) + 1;
  if (y1 == Complex(0.0, 0.0)) throw ConfigError("fiber_at: y1 = 0");
  for (const auto& bv : branch_values(z))
    if (bv.finite() && std::abs(y1 - bv.value) <= prox_tol)
      throw ConfigError("fiber_at: y1 too close to a branch value");

  // principal square roots; the all-plus sheet
  CVec w(n + 1);
  for (int c = 2; c <= n - 1; ++c)
    w[c] = std::sqrt(y1 * y1 - (z[0] - z[c - 1]) / y1);
  w[n] = std::sqrt(y1 * y1 - z[0] / y1);

  const int count = sheet_count(n);
  std::vector<FiberPoint> fiber(count);
  for (int s = 0; s < count; ++s) {
    CVec y(n);
    y[0] = y1;
    for (int c = 2; c <= n; ++c)
      y[c - 1] = double(sheet_sign(n, s, c)) * w[c];
    fiber[s] = {std::move(y), static_cast<uint32_t>(s)};
  }
  return fiber;
}

Complex base_point(const CVec& z) {
  const auto pts = finite_branch_points(branch_values(z));
  double maxmod = 0.0;
  std::vector<double> args;
  args.reserve(pts.size());
  for (const Complex& p : pts) {
    maxmod = std::max(maxmod, std::abs(p));
    args.push_back(std::arg(p));
  }
  const double radius = 2.0 * (1.0 + maxmod);
  std::sort(args.begin(), args.end());
  // widest angular gap, wrap-around included; ties resolved by first hit
  double best_gap = -1.0, theta = 0.0;
  for (std::size_t k = 0; k < args.size(); ++k) {
    const double next =
        (k + 1 < args.size()) ? args[k + 1] : args[0] + 2.0 * kPi;
    const double gap = next - args[k];
    if (gap > best_gap) {
      best_gap = gap;
      theta = args[k] + gap / 2.0;
    }
  }
  return std::polar(radius, theta);
}

std::string describe(const BranchValue& bv) {
  switch (bv.kind) {
    case BranchKind::CubeRootZ1:
      return "cbrt(z1)#" + std::to_string(bv.root_index);
    case BranchKind::CubeRootDiff:
      return "cbrt(z1-z" + std::to_string(bv.diff_index) + ")#" +
             std::to_string(bv.root_index);
    case BranchKind::Zero:
      return "0";
    case BranchKind::Infinity:
      return "inf";
  }
  return "?";
}

std::vector<CVec> ramification_points(const CVec& z, const BranchValue& a) {
  check_z(z);
  const int n = static_cast<int>(z.size()) + 1;
  if (!a.finite())
    throw ConfigError("ramification_points: branch value must be finite");
  const Complex v = a.value;
  const int vanish = (a.kind == BranchKind::CubeRootZ1) ? n : a.diff_index;

  CVec w(n + 1, Complex(0.0, 0.0));
  for (int c = 2; c <= n; ++c) {
    if (c == vanish) continue;
    const Complex zc = (c == n) ? Complex(0.0, 0.0) : z[c - 1];
    w[c] = std::sqrt(v * v - (z[0] - zc) / v);
  }

  std::vector<int> free_coords;
  for (int c = 2; c <= n; ++c)
    if (c != vanish) free_coords.push_back(c);

  const int count = 1 << (n - 2);
  std::vector<CVec> out;
  out.reserve(count);
  for (int s = 0; s < count; ++s) {
    CVec y(n, Complex(0.0, 0.0));
    y[0] = v;
    for (std::size_t k = 0; k < free_coords.size(); ++k) {
      const int c = free_coords[k];
      const bool minus = (s >> (free_coords.size() - 1 - k)) & 1;
      y[c - 1] = minus ? -w[c] : w[c];
    }
    out.push_back(std::move(y));
  }
  return out;
}

}  // namespace fiberscope
