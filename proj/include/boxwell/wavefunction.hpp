// Piecewise eigenfunction reconstruction: Cramer solve of the matching
// system, normalization, node counting, overlap integrals, and sampling.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "boxwell/conditions.hpp"

namespace boxwell {

// Matching coefficients in the gauge A = 1 (before normalization):
// A, D scale the wall-anchored outer pieces, B, C the inner pair.
struct Coefficients {
  double A, B, C, D;
};

struct Wavefunction {
  PotentialSpec spec;
  EnergyLevel level;
  std::array<RegionSolution, 3> regions;  // tiles [-a, c]
  double norm_constant;                   // N > 0 applied on top of A = 1
};

namespace detail {

template <typename F>
inline double simpson(F&& f, double lo, double hi, int panels) {
  const int n = (panels % 2) ? panels + 1 : panels;
  const double h = (hi - lo) / n;
  double acc = f(lo) + f(hi);
  for (int i = 1; i < n; ++i)
    acc += f(lo + i * h) * ((i % 2) ? 4.0 : 2.0);
  return acc * h / 3.0;
}

inline constexpr int kQuadPanels = 4096;  // per region

}  // namespace detail

// Solve three of the four matching equations for (B, C, D) with A = 1 by
// Cramer's rule, then check the left-out equation.  The natural row triple
// degenerates exactly when the right outer piece (or its slope) vanishes at
// x = b, so whichever of the two psi/psi' rows at +b has the larger right-hand
// entry is kept in the solve.
inline Coefficients solve_coefficients(const PotentialSpec& s,
                                       const EnergyLevel& level) {
  const auto m = detail::assemble(s, level.energy, /*scaled=*/false);
  const int kept = std::fabs(m.z[2]) >= std::fabs(m.z[3]) ? 2 : 3;
  const int left_out = kept == 2 ? 3 : 2;
  const int r0 = 0, r1 = 1, r2 = kept;

  const double delta = detail::det3(m.x[r0], m.y[r0], m.z[r0],
                                    m.x[r1], m.y[r1], m.z[r1],
                                    m.x[r2], m.y[r2], m.z[r2]);
  if (delta == 0.0)
    throw InconsistentSystem("solve_coefficients: singular matching system");
  const double B = detail::det3(m.w[r0], m.y[r0], m.z[r0],
                                m.w[r1], m.y[r1], m.z[r1],
                                m.w[r2], m.y[r2], m.z[r2]) / delta;
  const double C = detail::det3(m.x[r0], m.w[r0], m.z[r0],
                                m.x[r1], m.w[r1], m.z[r1],
                                m.x[r2], m.w[r2], m.z[r2]) / delta;
  const double D = detail::det3(m.x[r0], m.y[r0], m.w[r0],
                                m.x[r1], m.y[r1], m.w[r1],
                                m.x[r2], m.y[r2], m.w[r2]) / delta;

  const int r = left_out;
  const double lhs = m.x[r] * B + m.y[r] * C + m.z[r] * D;
  const double rhs = m.w[r];
  const double scale = std::fabs(m.x[r] * B) + std::fabs(m.y[r] * C) +
                       std::fabs(m.z[r] * D) + std::fabs(m.w[r]);
  // Generic levels are refined roots, so the left-out equation closes to
  // root-finder precision.  Special levels are exact only at the critical
  // v0; when v0 is quoted to a few decimals the system inherits a residual
  // of order |v0 - v0*|, hence the looser gate.
  const double gate = level.kind == LevelKind::Generic ? 1e-8 : 1e-2;
  if (std::fabs(lhs - rhs) > gate * std::fmax(1.0, scale))
    throw InconsistentSystem(
        "solve_coefficients: energy is not a converged eigenvalue");
  return {1.0, B, C, D};
}

// Assemble the three regions with regime-correct bases, then normalize so
// that the squared integral over [-a, c] is 1.  Outer pieces are anchored at
// their walls, so psi(-a) = psi(c) = 0 exactly; with A = 1 and N > 0 the
// slope at the left wall is positive, which fixes the overall sign.
inline Wavefunction build_wavefunction(const PotentialSpec& s,
                                       const EnergyLevel& level) {
  const Coefficients co = solve_coefficients(s, level);
  const double e = level.energy;
  std::array<RegionSolution, 3> regs{{
      {-s.a, -s.b, -s.a, classify_branch(e, 0.0), co.A, 0.0},
      {-s.b, s.b, 0.0, classify_branch(e, s.v0), co.B, co.C},
      {s.b, s.c, s.c, classify_branch(e, 0.0), co.D, 0.0},
  }};
  double norm2 = 0.0;
  for (const auto& r : regs)
    norm2 += detail::simpson(
        [&](double x) {
          const double v = r.value(x);
          return v * v;
        },
        r.x_lo, r.x_hi, detail::kQuadPanels);
  const double norm = 1.0 / std::sqrt(norm2);
  for (auto& r : regs) {
    r.coeff1 *= norm;
    r.coeff2 *= norm;
  }
  return {s, level, regs, norm};
}

inline double evaluate(const Wavefunction& wf, double x) {
  if (x < wf.regions.front().x_lo || x > wf.regions.back().x_hi)
    throw OutOfDomain("evaluate: x outside [-a, c]");
  for (const auto& r : wf.regions)
    if (x <= r.x_hi) return r.value(x);
  return wf.regions.back().value(x);
}

// Number of strict sign changes of psi on the open interval (-a, c).  All
// three bases admit closed-form zeros; a zero landing on a region joint is
// seen by both neighbours and counted once.
inline int count_nodes(const Wavefunction& wf) {
  std::vector<double> zeros;
  for (const auto& r : wf.regions) {
    const double t_lo = r.x_lo - r.x0, t_hi = r.x_hi - r.x0;
    switch (r.basis.branch) {
      case BranchKind::Trig: {
        // c1 sin + c2 cos = R sin(w t + phi); zeros at w t + phi = m pi
        const double om = r.basis.omega;
        const double phi = std::atan2(r.coeff2, r.coeff1);
        const long m_lo =
            static_cast<long>(std::ceil((om * t_lo + phi) / std::numbers::pi - 1e-12));
        const long m_hi =
            static_cast<long>(std::floor((om * t_hi + phi) / std::numbers::pi + 1e-12));
        for (long m = m_lo; m <= m_hi; ++m)
          zeros.push_back(r.x0 + (m * std::numbers::pi - phi) / om);
        break;
      }
      case BranchKind::Hyp: {
        // at most one zero: tanh(w t) = -c2/c1
        if (r.coeff1 != 0.0) {
          const double ratio = -r.coeff2 / r.coeff1;
          if (std::fabs(ratio) < 1.0) {
            const double t = std::atanh(ratio) / r.basis.omega;
            if (t >= t_lo - 1e-12 && t <= t_hi + 1e-12)
              zeros.push_back(r.x0 + t);
          }
        }
        break;
      }
      case BranchKind::Linear: {
        if (r.coeff1 != 0.0) {
          const double t = -r.coeff2 / r.coeff1;
          if (t >= t_lo - 1e-12 && t <= t_hi + 1e-12)
            zeros.push_back(r.x0 + t);
        }
        break;
      }
    }
  }
  std::sort(zeros.begin(), zeros.end());
  const double wall_l = wf.regions.front().x_lo;
  const double wall_r = wf.regions.back().x_hi;
  int count = 0;
  double last = wall_l;
  for (double z : zeros) {
    if (z <= wall_l + 1e-9 || z >= wall_r - 1e-9) continue;  // walls not nodes
    if (count > 0 && z - last < 1e-9) continue;              // joint duplicate
    ++count;
    last = z;
  }
  return count;
}

// Overlap integral over [-a, c] by composite Simpson per region.
inline double inner_product(const Wavefunction& f, const Wavefunction& g) {
  if (!(f.spec == g.spec))
    throw SpecMismatch("inner_product: wavefunctions built on different specs");
  double acc = 0.0;
  for (int i = 0; i < 3; ++i) {
    const auto& rf = f.regions[i];
    const auto& rg = g.regions[i];
    acc += detail::simpson(
        [&](double x) { return rf.value(x) * rg.value(x); }, rf.x_lo, rf.x_hi,
        detail::kQuadPanels);
  }
  return acc;
}

// Uniform (x, psi) samples including both walls; endpoints are exactly 0.
inline std::vector<std::pair<double, double>> sample(const Wavefunction& wf,
                                                     int n_points) {
  if (n_points < 2) throw DomainError("sample: need at least two points");
  const double lo = wf.regions.front().x_lo;
  const double hi = wf.regions.back().x_hi;
  std::vector<std::pair<double, double>> pts;
  pts.reserve(n_points);
  for (int i = 0; i < n_points; ++i) {
    double x;
    if (i == 0) x = lo;
    else if (i == n_points - 1) x = hi;
    else x = lo + (hi - lo) * static_cast<double>(i) / (n_points - 1);
    pts.emplace_back(x, evaluate(wf, x));
  }
  return pts;
}

}  // namespace boxwell
