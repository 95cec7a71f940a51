// Independent eigenvalue verification by direct numerical integration.
// A Numerov three-point scheme is run on per-region uniform grids pinned to
// the potential steps at +-b; two solutions shot from the walls are matched
// at x = 0 through a Wronskian-style mismatch.  Nothing here touches the
// closed-form conditions, and the special energies 0 and v0 need no special
// handling: the integrator treats them like any other energy.
#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "boxwell/potential.hpp"

namespace boxwell {

struct ShootingResult {
  double energy;
  double mismatch;   // normalized log-derivative discontinuity at x = 0
  double grid_step;  // requested step (per-region steps are <= this)
};

namespace detail {

struct NumerovRegion {
  double h;
  int steps;
  double g;  // e - V, constant within the region
};

// Pin region ends to grid points; never fewer steps than the derivative
// stencils need.
inline NumerovRegion outer_grid(double width, double h, double g) {
  const int n = std::max(6, static_cast<int>(std::ceil(width / h - 1e-12)));
  return {width / n, n, g};
}

// Even step count so x = 0 lands exactly on index steps/2.
inline NumerovRegion inner_grid(double b, double h, double g) {
  const int half = std::max(4, static_cast<int>(std::ceil(b / h - 1e-12)));
  return {b / half, 2 * half, g};
}

// y(h) for y(0) = y0, y'(0) = s0 under y'' = -g y, Taylor through h^5;
// local O(h^6), consistent with the Numerov recurrence it seeds.
inline double taylor_seed(double y0, double s0, double g, double h) {
  const double h2 = h * h;
  return y0 * (1.0 - g * h2 / 2.0 + g * g * h2 * h2 / 24.0) +
         s0 * h * (1.0 - g * h2 / 6.0 + g * g * h2 * h2 / 120.0);
}

// Numerov recurrence for constant g; rescales when the amplitude explodes in
// a deep classically forbidden region (zeros and signs survive scaling).
// Returns the cumulative scale factor applied to the whole array.
inline double propagate(const NumerovRegion& r, double y0, double y1,
                        std::vector<double>& y) {
  y.assign(r.steps + 1, 0.0);
  y[0] = y0;
  y[1] = y1;
  double scale = 1.0;
  const double w = r.h * r.h * r.g / 12.0;
  const double c_mid = 2.0 - 10.0 * w;
  const double c_adj = 1.0 + w;
  for (int j = 1; j < r.steps; ++j) {
    y[j + 1] = (c_mid * y[j] - c_adj * y[j - 1]) / c_adj;
    if (std::fabs(y[j + 1]) > 1e100) {
      for (int t = 0; t <= j + 1; ++t) y[t] *= 1e-100;
      scale *= 1e-100;
    }
  }
  return scale;
}

// One-sided five-point derivative at the last grid point, O(h^4).
inline double end_slope(const std::vector<double>& y, double h) {
  const auto n = y.size() - 1;
  return (25.0 * y[n] - 48.0 * y[n - 1] + 36.0 * y[n - 2] - 16.0 * y[n - 3] +
          3.0 * y[n - 4]) /
         (12.0 * h);
}

// Centered five-point derivative at index j, O(h^4).
inline double mid_slope(const std::vector<double>& y, int j, double h) {
  return (y[j - 2] - 8.0 * y[j - 1] + 8.0 * y[j + 1] - y[j + 2]) / (12.0 * h);
}

struct HalfShot {
  double value, slope;  // psi and dpsi/dx at x = 0
};

// Integrate from one wall (psi = 0, |psi'| = 1) into the inner region, two
// points past the matching point at x = 0.  The right shot runs in the
// mirrored coordinate, so its slope flips sign on return.
inline HalfShot shoot_to_center(const PotentialSpec& s, double e, double h,
                                bool from_left) {
  const double width = from_left ? s.d1() : s.d2();
  const NumerovRegion outer = outer_grid(width, h, e);
  const NumerovRegion inner = inner_grid(s.b, h, e - s.v0);

  std::vector<double> y;
  propagate(outer, 0.0, taylor_seed(0.0, 1.0, outer.g, outer.h), y);
  const double join_val = y.back();
  const double join_slope = end_slope(y, outer.h);

  const int half = inner.steps / 2;
  const NumerovRegion part{inner.h, half + 2, inner.g};
  std::vector<double> z;
  propagate(part, join_val,
            taylor_seed(join_val, join_slope, inner.g, inner.h), z);
  const double val = z[half];
  const double slope = mid_slope(z, half, inner.h);
  return from_left ? HalfShot{val, slope} : HalfShot{val, -slope};
}

// Full left-to-right sweep counting sign changes; by oscillation theory the
// count is the number of eigenvalues below e, which brackets levels exactly
// even when a mismatch scan would step over a close doublet.
inline int count_nodes_sweep(const PotentialSpec& s, double e, double h) {
  const NumerovRegion left = outer_grid(s.d1(), h, e);
  const NumerovRegion inner = inner_grid(s.b, h, e - s.v0);
  const NumerovRegion right = outer_grid(s.d2(), h, e);

  std::vector<double> samples;
  std::vector<double> y;
  propagate(left, 0.0, taylor_seed(0.0, 1.0, left.g, left.h), y);
  samples = y;
  double v = samples.back();
  double sl = end_slope(y, left.h);

  // propagate may rescale in place; apply the same factor to what came before
  double f = propagate(inner, v, taylor_seed(v, sl, inner.g, inner.h), y);
  if (f != 1.0)
    for (auto& t : samples) t *= f;
  samples.insert(samples.end(), y.begin() + 1, y.end());
  v = samples.back();
  sl = end_slope(y, inner.h);

  f = propagate(right, v, taylor_seed(v, sl, right.g, right.h), y);
  if (f != 1.0)
    for (auto& t : samples) t *= f;
  samples.insert(samples.end(), y.begin() + 1, y.end());

  int nodes = 0;
  for (std::size_t j = 1; j + 1 < samples.size(); ++j)
    if (samples[j] * samples[j + 1] < 0.0) ++nodes;
  return nodes;
}

}  // namespace detail

// Wronskian-style mismatch psi_L psi_R' - psi_R psi_L' at x = 0, normalized
// by the two shot amplitudes.  Continuous in e; zero exactly at eigenvalues.
inline double numerov_mismatch(const PotentialSpec& s, double e, double h) {
  if (!(h > 0.0)) throw DomainError("numerov_mismatch: need h > 0");
  const auto L = detail::shoot_to_center(s, e, h, true);
  const auto R = detail::shoot_to_center(s, e, h, false);
  const double w = L.value * R.slope - R.value * L.slope;
  const double scale = std::hypot(L.value, L.slope) * std::hypot(R.value, R.slope);
  return w / scale;
}

inline ShootingResult shoot(const PotentialSpec& s, double e, double h) {
  return {e, numerov_mismatch(s, e, h), h};
}

// The lowest n_levels eigenvalues by shooting alone.  Each level is isolated
// with the node-count staircase, then pinned down by bisection on the
// mismatch sign change.  The special energies 0 and v0 are found like any
// other level.
inline std::vector<double> numerov_spectrum(const PotentialSpec& s,
                                            int n_levels, double h) {
  if (n_levels < 1)
    throw DomainError("numerov_spectrum: n_levels must be >= 1");
  const double box_unit = std::numbers::pi * std::numbers::pi /
                          ((s.a + s.c) * (s.a + s.c));
  const double e_lo = std::fmin(0.0, s.v0) + 1e-9;
  double e_hi = std::fmax(0.0, s.v0) +
                (n_levels + 2.0) * (n_levels + 2.0) * box_unit;

  auto nodes_at = [&](double e) { return detail::count_nodes_sweep(s, e, h); };
  if (nodes_at(e_hi) < n_levels) {
    e_hi *= 2.0;
    if (nodes_at(e_hi) < n_levels)
      throw SpectrumIncomplete(
          "numerov_spectrum: fewer levels than requested below E_max");
  }

  std::vector<double> out;
  out.reserve(n_levels);
  const int n_lo = nodes_at(e_lo);
  const int n_hi = nodes_at(e_hi);
  for (int m = 1; m <= n_levels; ++m) {
    double u = e_lo, v = e_hi;
    int nu = n_lo, nv = n_hi;
    // isolate: exactly the m-th staircase jump inside (u, v)
    while ((nu != m - 1 || nv != m) && v - u > 1e-12 * (1.0 + std::fabs(u))) {
      const double mid = 0.5 * (u + v);
      const int nm = nodes_at(mid);
      if (nm >= m) {
        v = mid;
        nv = nm;
      } else {
        u = mid;
        nu = nm;
      }
    }
    double fu = numerov_mismatch(s, u, h);
    double fv = numerov_mismatch(s, v, h);
    if ((fu > 0.0) == (fv > 0.0)) {
      // mismatch did not flip (nearly tangent zero); the staircase bracket
      // itself is already tight enough to quote the midpoint
      out.push_back(0.5 * (u + v));
      continue;
    }
    for (int it = 0; it < 200 && v - u > 1e-13 * (1.0 + std::fabs(u)); ++it) {
      const double mid = 0.5 * (u + v);
      const double fm = numerov_mismatch(s, mid, h);
      if (fm == 0.0) {
        u = v = mid;
        break;
      }
      if ((fm > 0.0) == (fu > 0.0)) {
        u = mid;
        fu = fm;
      } else {
        v = mid;
        fv = fm;
      }
    }
    out.push_back(0.5 * (u + v));
  }
  return out;
}

}  // namespace boxwell
