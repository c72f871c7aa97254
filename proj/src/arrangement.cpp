#include "fiberscope/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fiberscope {

namespace {

// Distance from w to the nearest (real) integer point of the complex plane.
double dist_to_integers(Complex w) {
  return std::abs(w - Complex(std::round(w.real()), 0.0));
}

double margin_mbtilde(const CVec& u) {
  double m = std::numeric_limits<double>::infinity();
  const std::size_t n = u.size();
  for (std::size_t k = 0; k < n; ++k) m = std::min(m, dist_to_integers(u[k]));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m = std::min(m, dist_to_integers(u[i] - u[j]));
      m = std::min(m, dist_to_integers(u[i] + u[j]));
    }
  return m;
}

double margin_n(const CVec& v) {
  double m = std::numeric_limits<double>::infinity();
  const std::size_t n = v.size();
  for (std::size_t k = 0; k < n; ++k) {
    m = std::min(m, std::abs(v[k]));
    m = std::min(m, std::abs(v[k] - 1.0));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m = std::min(m, std::abs(v[i] - v[j]));
      // v_i != 1/v_j, measured as |v_i v_j - 1| / max|.| to stay finite
      // when a coordinate is itself near zero.
      const double den = std::max({std::abs(v[i]), std::abs(v[j]), 1e-300});
      m = std::min(m, std::abs(v[i] * v[j] - 1.0) / den);
    }
  return m;
}

double margin_p(const CVec& w) {
  double m = std::numeric_limits<double>::infinity();
  const std::size_t n = w.size();
  for (std::size_t k = 0; k < n; ++k) {
    m = std::min(m, std::abs(w[k] - 1.0));
    m = std::min(m, std::abs(w[k] + 1.0));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m = std::min(m, std::abs(w[i] - w[j]));
      m = std::min(m, std::abs(w[i] + w[j]));
    }
  return m;
}

double margin_y(const CVec& y) {
  double m = std::abs(y[0]);
  const std::size_t n = y.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m = std::min(m, std::abs(y[i] - y[j]));
      m = std::min(m, std::abs(y[i] + y[j]));
    }
  return m;
}

double margin_z(const CVec& z) {
  double m = std::numeric_limits<double>::infinity();
  const std::size_t n = z.size();
  for (std::size_t k = 0; k < n; ++k) m = std::min(m, std::abs(z[k]));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      m = std::min(m, std::abs(z[i] - z[j]));
  return m;
}

}  // namespace

double membership_margin(Space tag, const CVec& p) {
  if (p.empty()) throw ConfigError("membership: empty point");
  double m = 0.0;
  switch (tag) {
    case Space::MBtilde: m = margin_mbtilde(p); break;
    case Space::N: m = margin_n(p); break;
    case Space::P: m = margin_p(p); break;
    case Space::Y: m = margin_y(p); break;
    case Space::Z: m = margin_z(p); break;
  }
  return m / coord_scale(p);
}

bool membership(Space tag, const CVec& p, double tol_mem) {
  return membership_margin(tag, p) > tol_mem;
}

CVec map_f(const CVec& y, double tol_mem) {
  const std::size_t n = y.size();
  if (n < 3) throw ConfigError("map_f: need dimension >= 3");
  if (!membership(Space::Y, y, tol_mem))
    throw ConfigError("map_f: point is outside Y");
  const Complex y1 = y[0];
  const Complex yn2 = y[n - 1] * y[n - 1];
  CVec z(n - 1);
  for (std::size_t i = 0; i < n - 1; ++i) z[i] = y1 * (y[i] * y[i] - yn2);
  if (!membership(Space::Z, z, tol_mem))
    throw ConfigError("map_f: image violates Z membership");
  return z;
}

Complex moebius(Complex a, MapDir) {
  // Same formula both ways; only the domain bookkeeping differs, and the
  // shared pole sits at a == 1.
  if (a == Complex(1.0, 0.0)) throw ConfigError("moebius: pole at 1");
  return (a + 1.0) / (a - 1.0);
}

CVec cone_forward(const CVec& w, Complex lambda) {
  if (w.empty()) throw ConfigError("cone_forward: empty point");
  if (lambda == Complex(0.0, 0.0)) throw ConfigError("cone_forward: lambda = 0");
  CVec y(w.size() + 1);
  y[0] = lambda;
  for (std::size_t i = 0; i < w.size(); ++i) y[i + 1] = lambda * w[i];
  return y;
}

std::pair<CVec, Complex> cone_inverse(const CVec& y) {
  if (y.size() < 2) throw ConfigError("cone_inverse: need dimension >= 2");
  if (y[0] == Complex(0.0, 0.0)) throw ConfigError("cone_inverse: y1 = 0");
  CVec w(y.size() - 1);
  for (std::size_t i = 0; i + 1 < y.size(); ++i) w[i] = y[i + 1] / y[0];
  return {std::move(w), y[0]};
}

CVec exp_cover(const CVec& u) {
  CVec v(u.size());
  for (std::size_t k = 0; k < u.size(); ++k)
    v[k] = std::exp(Complex(0.0, 2.0 * kPi) * u[k]);
  return v;
}

namespace {
constexpr int kMaxRejects = 100000;
}

CVec sample_y(int n, Rng& rng, double margin) {
  if (n < 2) throw ConfigError("sample_y: n >= 2 required");
  CVec y(n);
  for (int tries = 0; tries < kMaxRejects; ++tries) {
    for (auto& c : y) c = rng.annulus(0.5, 2.0);
    if (margin_y(y) >= margin) return y;
  }
  throw ConfigError("sample_y: rejection sampling failed");
}

CVec sample_y_vanishing(int n, int zero_coord, Rng& rng, double margin) {
  if (zero_coord < 2 || zero_coord > n)
    throw ConfigError("sample_y_vanishing: coordinate must be in 2..n");
  CVec y(n);
  for (int tries = 0; tries < kMaxRejects; ++tries) {
    for (auto& c : y) c = rng.annulus(0.5, 2.0);
    y[zero_coord - 1] = 0.0;
    if (margin_y(y) >= margin) return y;
  }
  throw ConfigError("sample_y_vanishing: rejection sampling failed");
}

CVec sample_z(int n, Rng& rng, double margin) {
  if (n < 3) throw ConfigError("sample_z: n >= 3 required");
  CVec z(n - 1);
  for (int tries = 0; tries < kMaxRejects; ++tries) {
    for (auto& c : z) c = rng.annulus(0.5, 2.0);
    if (margin_z(z) >= margin) return z;
  }
  throw ConfigError("sample_z: rejection sampling failed");
}

CVec sample_p(int n, Rng& rng, double margin) {
  if (n < 1) throw ConfigError("sample_p: n >= 1 required");
  CVec w(n);
  for (int tries = 0; tries < kMaxRejects; ++tries) {
    for (auto& c : w) c = rng.annulus(0.5, 2.0);
    if (margin_p(w) >= margin) return w;
  }
  throw ConfigError("sample_p: rejection sampling failed");
}

CVec sample_m(int n, Rng& rng, double margin) {
  if (n < 1) throw ConfigError("sample_m: n >= 1 required");
  CVec u(n);
  for (int tries = 0; tries < kMaxRejects; ++tries) {
    for (auto& c : u) c = rng.box(2.5, 0.5);
    if (margin_mbtilde(u) >= margin) return u;
  }
  throw ConfigError("sample_m: rejection sampling failed");
}

CVec canonical_z(int n) {
  if (n < 3) throw ConfigError("canonical_z: n >= 3 required");
  CVec z(n - 1);
  for (int i = 0; i < n - 1; ++i) z[i] = Complex(i + 1, 0.0);
  return z;
}

}  // namespace fiberscope
