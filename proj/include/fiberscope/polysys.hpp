#pragma once

#include <vector>

#include <Eigen/Dense>

#include "fiberscope/types.hpp"

namespace fiberscope {

using CMatrix = Eigen::MatrixXcd;

/// The defining data of the graph curve over a fixed z in Z:
///   S_i = z_i - y_1 (y_i^2 - y_n^2),  i = 1..n-1.
struct AffineSystem {
  int n;   // ambient dimension, >= 3
  CVec z;  // n-1 coordinates, a point of Z

  AffineSystem(int n_, CVec z_);
};

/// Residuals of S at y (n components in, n-1 out).
CVec eval_S(const AffineSystem& sys, const CVec& y);

/// The projective chart x_i = y_i/y_n. Rows: first the n-1 cubics
/// z_i x0^3 - x1 x_i^2 + x1, then the C(n-1,2) quadrics
/// x_i^2 z_j - z_j - x_j^2 z_i + z_i ordered lexicographically by i < j.
CVec eval_chart(const AffineSystem& sys, const CVec& x);

/// The homogenized system at y = (y0:...:yn), same row layout as eval_chart.
CVec eval_homog(const AffineSystem& sys, const CVec& yh);

/// Jacobian of f = (y_1(y_i^2-y_n^2))_i with respect to y; (n-1) x n.
CMatrix jacobian_M1(const AffineSystem& sys, const CVec& y);

/// Jacobian of the chart system with respect to (x_0..x_{n-1}, z_1..z_{n-1});
/// rows as in eval_chart, ((n-1)+C(n-1,2)) x (2n-1).
CMatrix jacobian_chart(const AffineSystem& sys, const CVec& x);

/// The boundary component B2 as a zero set: {x_0, x_1, x_i^2 z_1 - z_1^2 + z_i^2}.
CVec eval_B2_system(const AffineSystem& sys, const CVec& x);

/// Jacobian of eval_B2_system with respect to all 2n-1 variables; n x (2n-1).
CMatrix jacobian_B2(const AffineSystem& sys, const CVec& x);

/// Number of singular values above tol_rank * (largest singular value).
int numeric_rank(const CMatrix& m, double tol_rank = kTolRank);

/// (smallest retained)/(largest discarded) singular value; +inf when nothing
/// is discarded.
double rank_gap(const CMatrix& m, double tol_rank = kTolRank);

/// columns - numeric_rank.
int kernel_dim(const CMatrix& m, double tol_rank = kTolRank);

/// Orthonormal basis of the numerical null space (right singular vectors).
CMatrix kernel_basis(const CMatrix& m, double tol_rank = kTolRank);

enum class BoundaryKind { B1, B2 };

struct BoundaryPoint {
  BoundaryKind kind;
  CVec x;  // chart coordinates, x[0] == 0
};

/// All 2^{n-1} B1 points (x_1..x_{n-1} in {+-1}) followed by the 2^{n-2} B2
/// points (x_0 = x_1 = 0, x_i = +- principal sqrt((z_1-z_i)/z_1)), each sign
/// enumeration lexicographic with + before -.
std::vector<BoundaryPoint> enumerate_boundary(const AffineSystem& sys);

/// The bordered-diagonal (n-1) x n matrix
///   row 0: (b_0, 0, ..., 0, c_0)
///   row k: (b_k, 0, .., a_k at column k, .., 0, c_k), k = 1..n-2.
struct StructuredMatrix {
  int n;
  CVec a;  // a_1..a_{n-2}
  CVec b;  // b_0..b_{n-2}
  CVec c;  // c_0..c_{n-2}

  CMatrix dense() const;
  /// Columns are 1-based as in dense(); removing column i for 2 <= i <= n-1.
  CMatrix dense_without_column(int i) const;
};

/// Closed form for |dense_without_column(i)|:
///   (-1)^{n+i-1} a_1..a_{i-2} a_i..a_{n-2} (b_0 c_{i-1} - c_0 b_{i-1}).
Complex structured_det(const StructuredMatrix& m, int i);

/// Row-reduction determinant with partial pivoting; the independent check
/// against structured_det. Square, dimension <= 12.
Complex det_oracle(CMatrix m);

struct PathOptions {
  double eps = 1e-2;        // admissible parameter range [0, eps)
  double newton_tol = 1e-13;
  int max_newton = 32;
  int substeps = 64;        // continuation resolution from t = 0
};

/// The analytic arc into the affine curve from a boundary point: x_0(t) = t,
/// x_1(t) the branch of z_1 t^3 - x_1^3 + x_1 = 0 through p_1, and the x_i
/// the square-root branches through p_i. Throws TrackError when the cubic
/// Newton iteration stalls (eps too large).
CVec boundary_path(const AffineSystem& sys, const BoundaryPoint& p, double t,
                   const PathOptions& opt = {});

}  // namespace fiberscope
