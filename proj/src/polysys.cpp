#include "fiberscope/polysys.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/SVD>

#include "fiberscope/arrangement.hpp"

namespace fiberscope {

AffineSystem::AffineSystem(int n_, CVec z_) : n(n_), z(std::move(z_)) {
  if (n < 3) throw ConfigError("AffineSystem: n >= 3 required");
  if (static_cast<int>(z.size()) != n - 1)
    throw ConfigError("AffineSystem: z must have n-1 coordinates");
  if (!all_finite(z) || !membership(Space::Z, z, 1e-12))
    throw ConfigError("AffineSystem: z violates Z membership");
}

CVec eval_S(const AffineSystem& sys, const CVec& y) {
  const int n = sys.n;
  if (static_cast<int>(y.size()) != n)
    throw ConfigError("eval_S: y must have n coordinates");
  const Complex y1 = y[0];
  const Complex yn2 = y[n - 1] * y[n - 1];
  CVec r(n - 1);
  for (int i = 1; i <= n - 1; ++i)
    r[i - 1] = sys.z[i - 1] - y1 * (y[i - 1] * y[i - 1] - yn2);
  return r;
}

CVec eval_chart(const AffineSystem& sys, const CVec& x) {
  const int n = sys.n;
  if (static_cast<int>(x.size()) != n)
    throw ConfigError("eval_chart: x must have n coordinates");
  CVec r;
  r.reserve((n - 1) + (n - 1) * (n - 2) / 2);
  const Complex x0c = x[0] * x[0] * x[0];
  const Complex x1 = x[1];
  for (int i = 1; i <= n - 1; ++i)
    r.push_back(sys.z[i - 1] * x0c - x1 * x[i] * x[i] + x1);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j)
      r.push_back(x[i] * x[i] * sys.z[j - 1] - sys.z[j - 1] -
                  x[j] * x[j] * sys.z[i - 1] + sys.z[i - 1]);
  return r;
}

CVec eval_homog(const AffineSystem& sys, const CVec& yh) {
  const int n = sys.n;
  if (static_cast<int>(yh.size()) != n + 1)
    throw ConfigError("eval_homog: point must have n+1 coordinates");
  CVec r;
  r.reserve((n - 1) + (n - 1) * (n - 2) / 2);
  const Complex y0c = yh[0] * yh[0] * yh[0];
  const Complex yn2 = yh[n] * yh[n];
  for (int i = 1; i <= n - 1; ++i)
    r.push_back(sys.z[i - 1] * y0c - yh[1] * (yh[i] * yh[i] - yn2));
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j)
      r.push_back((yh[i] * yh[i] - yn2) * sys.z[j - 1] -
                  (yh[j] * yh[j] - yn2) * sys.z[i - 1]);
  return r;
}

CMatrix jacobian_M1(const AffineSystem& sys, const CVec& y) {
  const int n = sys.n;
  if (static_cast<int>(y.size()) != n)
    throw ConfigError("jacobian_M1: y must have n coordinates");
  const Complex y1 = y[0];
  const Complex yn = y[n - 1];
  CMatrix m = CMatrix::Zero(n - 1, n);
  for (int i = 1; i <= n - 1; ++i) {
    const int r = i - 1;
    if (i == 1)
      m(r, 0) = 3.0 * y1 * y1 - yn * yn;
    else {
      m(r, 0) = y[i - 1] * y[i - 1] - yn * yn;
      m(r, i - 1) = 2.0 * y1 * y[i - 1];
    }
    m(r, n - 1) = -2.0 * y1 * yn;
  }
  return m;
}

CMatrix jacobian_chart(const AffineSystem& sys, const CVec& x) {
  const int n = sys.n;
  if (static_cast<int>(x.size()) != n)
    throw ConfigError("jacobian_chart: x must have n coordinates");
  const int rows = (n - 1) + (n - 1) * (n - 2) / 2;
  CMatrix m = CMatrix::Zero(rows, 2 * n - 1);
  const Complex x0sq3 = 3.0 * x[0] * x[0];
  const Complex x0c = x[0] * x[0] * x[0];
  // cubic rows: z_i x0^3 - x1 x_i^2 + x1
  for (int i = 1; i <= n - 1; ++i) {
    const int r = i - 1;
    m(r, 0) = sys.z[i - 1] * x0sq3;
    if (i == 1)
      m(r, 1) = -3.0 * x[1] * x[1] + 1.0;
    else {
      m(r, 1) = -x[i] * x[i] + 1.0;
      m(r, i) = -2.0 * x[1] * x[i];
    }
    m(r, n + (i - 1)) = x0c;
  }
  // quadric rows: x_i^2 z_j - z_j - x_j^2 z_i + z_i
  int r = n - 1;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j, ++r) {
      m(r, i) = 2.0 * sys.z[j - 1] * x[i];
      m(r, j) = -2.0 * sys.z[i - 1] * x[j];
      m(r, n + (i - 1)) = 1.0 - x[j] * x[j];
      m(r, n + (j - 1)) = x[i] * x[i] - 1.0;
    }
  return m;
}

CVec eval_B2_system(const AffineSystem& sys, const CVec& x) {
  const int n = sys.n;
  if (static_cast<int>(x.size()) != n)
    throw ConfigError("eval_B2_system: x must have n coordinates");
  CVec r;
  r.reserve(n);
  r.push_back(x[0]);
  r.push_back(x[1]);
  const Complex z1 = sys.z[0];
  for (int i = 2; i <= n - 1; ++i)
    r.push_back(x[i] * x[i] * z1 - z1 * z1 + sys.z[i - 1] * sys.z[i - 1]);
  return r;
}

CMatrix jacobian_B2(const AffineSystem& sys, const CVec& x) {
  const int n = sys.n;
  if (static_cast<int>(x.size()) != n)
    throw ConfigError("jacobian_B2: x must have n coordinates");
  CMatrix m = CMatrix::Zero(n, 2 * n - 1);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  const Complex z1 = sys.z[0];
  for (int i = 2; i <= n - 1; ++i) {
    const int r = i;
    m(r, i) = 2.0 * x[i] * z1;
    m(r, n) = x[i] * x[i] - 2.0 * z1;           // d/dz_1
    m(r, n + (i - 1)) = 2.0 * sys.z[i - 1];     // d/dz_i
  }
  return m;
}

namespace {

Eigen::VectorXd singular_values(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues();
}

}  // namespace

int numeric_rank(const CMatrix& m, double tol_rank) {
  if (m.size() == 0) throw ConfigError("numeric_rank: empty matrix");
  const Eigen::VectorXd sv = singular_values(m);
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cut = tol_rank * sv(0);
  int rank = 0;
  while (rank < sv.size() && sv(rank) > cut) ++rank;
  return rank;
}

double rank_gap(const CMatrix& m, double tol_rank) {
  const Eigen::VectorXd sv = singular_values(m);
  const int rank = numeric_rank(m, tol_rank);
  if (rank >= sv.size()) return std::numeric_limits<double>::infinity();
  if (rank == 0) return 0.0;
  const double discarded = sv(rank);
  if (discarded == 0.0) return std::numeric_limits<double>::infinity();
  return sv(rank - 1) / discarded;
}

int kernel_dim(const CMatrix& m, double tol_rank) {
  return static_cast<int>(m.cols()) - numeric_rank(m, tol_rank);
}

CMatrix kernel_basis(const CMatrix& m, double tol_rank) {
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  int rank = 0;
  if (sv.size() > 0 && sv(0) > 0.0) {
    const double cut = tol_rank * sv(0);
    while (rank < sv.size() && sv(rank) > cut) ++rank;
  }
  return svd.matrixV().rightCols(m.cols() - rank);
}

std::vector<BoundaryPoint> enumerate_boundary(const AffineSystem& sys) {
  const int n = sys.n;
  std::vector<BoundaryPoint> pts;
  pts.reserve((1 << (n - 1)) + (1 << (n - 2)));
  // B1: x_0 = 0, x_1..x_{n-1} = +-1. Sign bit for x_c has weight 2^{n-1-c},
  // so enumeration is lexicographic with + before -.
  for (int s = 0; s < (1 << (n - 1)); ++s) {
    CVec x(n, Complex(0.0, 0.0));
    for (int c = 1; c <= n - 1; ++c) {
      const bool minus = (s >> (n - 1 - c)) & 1;
      x[c] = minus ? Complex(-1.0, 0.0) : Complex(1.0, 0.0);
    }
    pts.push_back({BoundaryKind::B1, std::move(x)});
  }
  // B2: x_0 = x_1 = 0, x_i = +- principal sqrt((z_1-z_i)/z_1) for i >= 2.
  CVec root(n, Complex(0.0, 0.0));
  for (int c = 2; c <= n - 1; ++c)
    root[c] = std::sqrt((sys.z[0] - sys.z[c - 1]) / sys.z[0]);
  for (int s = 0; s < (1 << (n - 2)); ++s) {
    CVec x(n, Complex(0.0, 0.0));
    for (int c = 2; c <= n - 1; ++c) {
      const bool minus = (s >> (n - 1 - c)) & 1;
      x[c] = minus ? -root[c] : root[c];
    }
    pts.push_back({BoundaryKind::B2, std::move(x)});
  }
  return pts;
}

CMatrix StructuredMatrix::dense() const {
  if (n < 3 || static_cast<int>(a.size()) != n - 2 ||
      static_cast<int>(b.size()) != n - 1 || static_cast<int>(c.size()) != n - 1)
    throw ConfigError("StructuredMatrix: inconsistent field lengths");
  CMatrix m = CMatrix::Zero(n - 1, n);
  for (int r = 0; r <= n - 2; ++r) {
    m(r, 0) = b[r];
    m(r, n - 1) = c[r];
    if (r >= 1) m(r, r) = a[r - 1];
  }
  return m;
}

CMatrix StructuredMatrix::dense_without_column(int i) const {
  if (i < 2 || i > n - 1)
    throw ConfigError("StructuredMatrix: column index must be in 2..n-1");
  const CMatrix full = dense();
  CMatrix m(n - 1, n - 1);
  int col = 0;
  for (int j = 0; j < n; ++j) {
    if (j == i - 1) continue;
    m.col(col++) = full.col(j);
  }
  return m;
}

Complex structured_det(const StructuredMatrix& m, int i) {
  if (m.n < 3 || static_cast<int>(m.a.size()) != m.n - 2 ||
      static_cast<int>(m.b.size()) != m.n - 1 ||
      static_cast<int>(m.c.size()) != m.n - 1)
    throw ConfigError("structured_det: inconsistent field lengths");
  if (i < 2 || i > m.n - 1)
    throw ConfigError("structured_det: column index must be in 2..n-1");
  Complex prod(1.0, 0.0);
  for (int k = 1; k <= i - 2; ++k) prod *= m.a[k - 1];
  for (int k = i; k <= m.n - 2; ++k) prod *= m.a[k - 1];
  const double sign = ((m.n + i - 1) % 2 == 0) ? 1.0 : -1.0;
  return sign * prod * (m.b[0] * m.c[i - 1] - m.c[0] * m.b[i - 1]);
}

Complex det_oracle(CMatrix m) {
  if (m.rows() != m.cols()) throw ConfigError("det_oracle: matrix not square");
  const int n = static_cast<int>(m.rows());
  if (n == 0 || n > 12) throw ConfigError("det_oracle: dimension must be 1..12");
  Complex det(1.0, 0.0);
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int r = k + 1; r < n; ++r)
      if (std::abs(m(r, k)) > std::abs(m(piv, k))) piv = r;
    if (m(piv, k) == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
    if (piv != k) {
      m.row(piv).swap(m.row(k));
      det = -det;
    }
    det *= m(k, k);
    for (int r = k + 1; r < n; ++r) {
      const Complex factor = m(r, k) / m(k, k);
      m.row(r).tail(n - k) -= factor * m.row(k).tail(n - k);
    }
  }
  return det;
}

namespace {

// One continuous branch of z_1 s^3 - x1^3 + x1 = 0, advanced from the
// previous value by Newton. g'(x1) = 1 - 3 x1^2 stays away from zero near
// both starting values (x1 = +-1 and x1 = 0).
Complex cubic_branch_step(Complex z1, double s, Complex x1_prev,
                          const PathOptions& opt) {
  Complex x1 = x1_prev;
  const double s3 = s * s * s;
  for (int it = 0; it < opt.max_newton; ++it) {
    const Complex g = z1 * s3 - x1 * x1 * x1 + x1;
    if (std::abs(g) <= opt.newton_tol * (1.0 + std::abs(z1)))
      return x1;
    const Complex dg = 1.0 - 3.0 * x1 * x1;
    if (std::abs(dg) < 1e-8)
      throw TrackError("boundary_path: cubic derivative degenerate");
    x1 -= g / dg;
  }
  throw TrackError("boundary_path: cubic Newton stalled (eps too large)");
}

Complex continuous_sqrt(Complex value, Complex prev) {
  const Complex w = std::sqrt(value);
  return (std::abs(w - prev) <= std::abs(-w - prev)) ? w : -w;
}

}  // namespace

CVec boundary_path(const AffineSystem& sys, const BoundaryPoint& p, double t,
                   const PathOptions& opt) {
  const int n = sys.n;
  if (static_cast<int>(p.x.size()) != n)
    throw ConfigError("boundary_path: chart point must have n coordinates");
  if (t < 0.0 || t >= opt.eps)
    throw ConfigError("boundary_path: t must lie in [0, eps)");
  if (t == 0.0) return p.x;

  const Complex z1 = sys.z[0];
  CVec x = p.x;
  Complex x1 = p.x[1];
  const int steps = std::max(1, opt.substeps);
  for (int k = 1; k <= steps; ++k) {
    const double s = t * double(k) / double(steps);
    x1 = cubic_branch_step(z1, s, x1, opt);
    const double s3 = s * s * s;
    for (int i = 2; i <= n - 1; ++i) {
      const Complex target =
          (p.kind == BoundaryKind::B1)
              ? sys.z[i - 1] * s3 / x1 + 1.0
              : (x1 * x1 - 1.0) * sys.z[i - 1] / z1 + 1.0;
      x[i] = continuous_sqrt(target, x[i]);
    }
    x[0] = s;
    x[1] = x1;
  }
  return x;
}

}  // namespace fiberscope
