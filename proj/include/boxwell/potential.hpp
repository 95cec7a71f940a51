// Domain types for a rectangular barrier or well enclosed by two rigid walls.
// Natural units throughout: 2m = hbar^2 = 1, so energies are squared
// wavenumbers and lengths are dimensionless.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace boxwell {

struct GeometryError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct WindowError : std::domain_error {
  using std::domain_error::domain_error;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct OutOfDomain : std::domain_error {
  using std::domain_error::domain_error;
};

struct SpecMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpectrumIncomplete : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InconsistentSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// |E - V| below this is treated as the zero-curvature (linear) branch.
inline constexpr double kLinearBand = 1e-9;

// Half-width of the exclusion windows around E = 0 and E = V0, where the
// generic matching condition vanishes without an eigenvalue.
inline constexpr double kSpuriousWindow = 1e-6;

// Geometry and inner level of the boxed rectangular potential:
//   V = +inf for x <= -a or x >= c, V = v0 on [-b, b], V = 0 elsewhere.
struct PotentialSpec {
  double a;   // left wall at x = -a
  double b;   // half-width of the inner region [-b, b]
  double c;   // right wall at x = +c
  double v0;  // inner level: > 0 barrier (double well), < 0 hole

  double d1() const { return a - b; }
  double d2() const { return c - b; }
  double d() const { return d1() + d2(); }
  bool symmetric() const { return d1() == d2(); }
  double value_at(double x) const { return std::fabs(x) <= b ? v0 : 0.0; }

  friend bool operator==(const PotentialSpec&, const PotentialSpec&) = default;
};

inline PotentialSpec make_spec(double a, double b, double c, double v0) {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) &&
        std::isfinite(v0)))
    throw GeometryError("make_spec: parameters must be finite");
  if (!(b > 0.0)) throw GeometryError("make_spec: b must be positive");
  if (!(a > b)) throw GeometryError("make_spec: need a > b so that d1 > 0");
  if (!(c > b)) throw GeometryError("make_spec: need c > b so that d2 > 0");
  return PotentialSpec{a, b, c, v0};
}

enum class BranchKind { Trig, Hyp, Linear };

// Local solution family with its wavenumber (omega is 0 for Linear):
// Trig where E - V > 0, Hyp where E - V < 0, Linear inside the band.
struct BasisKind {
  BranchKind branch;
  double omega;
};

inline BasisKind classify_branch(double e, double v) {
  const double gap = e - v;
  if (std::fabs(gap) < kLinearBand) return {BranchKind::Linear, 0.0};
  if (gap > 0.0) return {BranchKind::Trig, std::sqrt(gap)};
  return {BranchKind::Hyp, std::sqrt(-gap)};
}

// One piecewise branch of an eigenfunction on [x_lo, x_hi].  The basis is
// evaluated at t = x - x0, so wall-anchored pieces vanish exactly at the wall.
// coeff1/coeff2 mean sin/cos amplitudes, sinh/cosh amplitudes, or
// slope/intercept depending on the branch.
struct RegionSolution {
  double x_lo, x_hi;
  double x0;
  BasisKind basis;
  double coeff1, coeff2;

  double value(double x) const {
    const double t = x - x0;
    switch (basis.branch) {
      case BranchKind::Trig:
        return coeff1 * std::sin(basis.omega * t) +
               coeff2 * std::cos(basis.omega * t);
      case BranchKind::Hyp:
        return coeff1 * std::sinh(basis.omega * t) +
               coeff2 * std::cosh(basis.omega * t);
      case BranchKind::Linear:
        return coeff1 * t + coeff2;
    }
    return 0.0;
  }

  double derivative(double x) const {
    const double t = x - x0;
    switch (basis.branch) {
      case BranchKind::Trig:
        return basis.omega * (coeff1 * std::cos(basis.omega * t) -
                              coeff2 * std::sin(basis.omega * t));
      case BranchKind::Hyp:
        return basis.omega * (coeff1 * std::cosh(basis.omega * t) +
                              coeff2 * std::sinh(basis.omega * t));
      case BranchKind::Linear:
        return coeff1;
    }
    return 0.0;
  }

  // Exact for all three branches: psi'' = -w^2 psi, +w^2 psi, or 0.
  double second_derivative(double x) const {
    switch (basis.branch) {
      case BranchKind::Trig:
        return -basis.omega * basis.omega * value(x);
      case BranchKind::Hyp:
        return basis.omega * basis.omega * value(x);
      case BranchKind::Linear:
        return 0.0;
    }
    return 0.0;
  }
};

enum class LevelKind { Generic, ZeroEnergy, BarrierTop };

inline const char* to_string(LevelKind k) {
  switch (k) {
    case LevelKind::Generic: return "generic";
    case LevelKind::ZeroEnergy: return "zero-energy";
    case LevelKind::BarrierTop: return "barrier-top";
  }
  return "?";
}

// One eigenvalue; n counts from 0 (ground state) and equals the node count
// by the oscillation theorem.
struct EnergyLevel {
  int n;
  double energy;
  LevelKind kind;
  int nodes;
};

enum class SpecialKind { HoleZeroEnergy, BarrierTop };

// A critical value of v0: hole depth admitting E = 0, or barrier height
// admitting E = V0, as the order-th level.
struct SpecialRoot {
  int order;
  double v0;
  SpecialKind kind;
};

}  // namespace boxwell
