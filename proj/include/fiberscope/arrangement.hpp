#pragma once

#include <utility>

#include "fiberscope/rng.hpp"
#include "fiberscope/types.hpp"

namespace fiberscope {

/// The five arrangement complements. Coordinates are 1-based in the defining
/// inequations; vectors here are 0-based with p[0] = first coordinate.
///   MBtilde: u_k and u_i +- u_j away from the integers
///   N:       v_k != 0,1 and v_i != v_j^{+-1}
///   P:       w_k != +-1 and w_i != +-w_j
///   Y:       y_1 != 0 and y_i != +-y_j
///   Z:       z_k != 0 and z_i != z_j
enum class Space { MBtilde, N, P, Y, Z };

/// Smallest defining-inequation margin of p in the tagged space, divided by
/// max(1, |p|_inf). Nonpositive means p sits on a deleted hyperplane.
double membership_margin(Space tag, const CVec& p);

bool membership(Space tag, const CVec& p, double tol_mem = kTolMem);

/// f(y) = (y1(y1^2-yn^2), ..., y1(y_{n-1}^2-yn^2)). Rejects y outside Y and
/// images outside Z.
CVec map_f(const CVec& y, double tol_mem = kTolMem);

enum class MapDir { Forward, Inverse };

/// a -> (a+1)/(a-1). The formula is its own inverse; Forward maps C-{0,1}
/// onto C-{+1,-1} and Inverse undoes it. Throws on the pole a == 1.
Complex moebius(Complex a, MapDir dir = MapDir::Forward);

/// (w_1..w_n, lambda) -> (lambda, lambda w_1, ..., lambda w_n), a bijection
/// P x C* -> Y in dimension n+1.
CVec cone_forward(const CVec& w, Complex lambda);
std::pair<CVec, Complex> cone_inverse(const CVec& y);

/// componentwise u -> e^{2 pi i u}; carries MBtilde onto N.
CVec exp_cover(const CVec& u);

// Seeded rejection samplers. Coordinates live in the annulus 0.5 <= |.| <= 2
// and all membership margins are kept >= margin, which keeps the downstream
// Newton systems well conditioned.
CVec sample_y(int n, Rng& rng, double margin = 0.05);
/// Y sample with the given coordinate (paper index in 2..n) pinned to zero.
CVec sample_y_vanishing(int n, int zero_coord, Rng& rng, double margin = 0.05);
CVec sample_z(int n, Rng& rng, double margin = 0.05);
CVec sample_p(int n, Rng& rng, double margin = 0.05);
CVec sample_m(int n, Rng& rng, double margin = 0.05);

/// z_i = i, the canonical base point of Z.
CVec canonical_z(int n);

}  // namespace fiberscope
