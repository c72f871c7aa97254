#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fiberscope/types.hpp"

namespace fiberscope {

/// Values of y_1 over which the degree-2^{n-1} projection (y_1,..,y_n) -> y_1
/// of the curve S = 0 degenerates: the cube roots of z_1 (the y_n sheet pair
/// collides) and of z_1 - z_i (the y_i pair collides), plus 0 and infinity.
enum class BranchKind { CubeRootZ1, CubeRootDiff, Zero, Infinity };

struct BranchValue {
  BranchKind kind;
  int diff_index = 0;  // paper coordinate i in 2..n-1 for CubeRootDiff
  int root_index = 0;  // 0..2 for the cube-root kinds
  Complex value{};     // infinity marker carries (inf, 0)

  bool finite() const {
    return kind == BranchKind::CubeRootZ1 || kind == BranchKind::CubeRootDiff;
  }
};

/// The 3(n-1) finite values (cube roots of z_1 first, then of z_1-z_i for
/// i = 2..n-1, root_index 0..2 each), followed by the Zero and Infinity
/// markers.
std::vector<BranchValue> branch_values(const CVec& z);

std::vector<Complex> finite_branch_points(const std::vector<BranchValue>& bvs);

/// factor * (min pairwise distance among the finite branch values and 0).
double proximity_radius(const CVec& z, double factor = 0.05);

/// A point of the fiber over y_1 = y[0], tagged with its canonical sheet.
/// Sheets are sign vectors on (y_2,..,y_{n-1},y_n): bit weight 2^{n-c} for
/// coordinate y_c, bit set = minus, so index order is lexicographic with +
/// before - and y_2 most significant.
struct FiberPoint {
  CVec y;
  uint32_t sheet = 0;
};

int sheet_count(int n);
/// XOR mask flipping the sign of paper coordinate c in 2..n.
uint32_t sheet_flip_mask(int n, int c);
/// Sign (+1/-1) of coordinate c on the given sheet.
int sheet_sign(int n, uint32_t sheet, int c);

/// All 2^{n-1} fiber points over y_1, canonical sheet order:
///   y_i = +- sqrt(y_1^2 - (z_1-z_i)/y_1) (i = 2..n-1),
///   y_n = +- sqrt(y_1^2 - z_1/y_1),
/// principal square roots defining the all-plus sheet. Requires y_1 != 0 and
/// farther than prox_tol from every finite branch value.
std::vector<FiberPoint> fiber_at(const CVec& z, Complex y1, double prox_tol);

/// Deterministic monodromy base point: R e^{i theta} with
/// R = 2 (1 + max |finite branch value|) and theta the midpoint of the
/// widest angular gap between branch-value arguments.
Complex base_point(const CVec& z);

/// The 2^{n-2} points over a finite branch value where exactly one
/// coordinate vanishes (y_n over cube roots of z_1, y_i over cube roots of
/// z_1 - z_i); the remaining coordinates follow the fiber formulas at y_1 = a.
std::vector<CVec> ramification_points(const CVec& z, const BranchValue& a);

/// Short label, e.g. "cbrt(z1)#0", "cbrt(z1-z3)#2", "0", "inf".
std::string describe(const BranchValue& bv);

}  // namespace fiberscope
