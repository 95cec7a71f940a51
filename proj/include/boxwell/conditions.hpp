// Closed-form eigenvalue conditions.  Each condition is a scalar residual
// whose roots are the quantities of interest: discrete energies for a fixed
// potential, or critical heights/depths for a fixed geometry.  The generic
// condition is also available as the raw 4x4 matching determinant assembled
// with regime-correct bases.
#pragma once

#include "boxwell/potential.hpp"

namespace boxwell {

enum class Regime {
  BelowZero,         // e below both 0 and v0
  ZeroWindow,        // |e| within the exclusion window
  Mid,               // between the two special energies
  BarrierTopWindow,  // |e - v0| within the exclusion window
  AboveBarrier       // e above both 0 and v0
};

struct Residual {
  double value;
  Regime regime;
};

inline Regime classify_regime(const PotentialSpec& s, double e) {
  if (std::fabs(e) <= kSpuriousWindow) return Regime::ZeroWindow;
  if (std::fabs(e - s.v0) <= kSpuriousWindow) return Regime::BarrierTopWindow;
  if (e < std::fmin(0.0, s.v0)) return Regime::BelowZero;
  if (e > std::fmax(0.0, s.v0)) return Regime::AboveBarrier;
  return Regime::Mid;
}

// Condition for a zero-energy state with a barrier (v0 = q^2 > 0).  Every
// term is positive for q > 0, so the condition has no root: a double well
// never supports E = 0.
inline double zero_energy_barrier_residual(const PotentialSpec& s, double q) {
  const double d1 = s.d1(), d2 = s.d2();
  return (d1 + d2) * q * std::cosh(2.0 * q * s.b) +
         (1.0 + d1 * d2 * q * q) * std::sinh(2.0 * q * s.b);
}

// Condition for a zero-energy state with a hole (v0 = -r^2 < 0).  Has
// infinitely many roots in r; the n-th one is the depth at which E = 0 is
// the n-th level.  r = 0 solves it identically and is not an eigenvalue.
inline double zero_energy_hole_residual(const PotentialSpec& s, double r) {
  const double d1 = s.d1(), d2 = s.d2();
  return (d1 + d2) * r * std::cos(2.0 * s.b * r) +
         (1.0 - d1 * d2 * r * r) * std::sin(2.0 * s.b * r);
}

// Condition for a barrier-top state (E = v0 = s^2 > 0); roots are the
// critical heights.  s = 0 is again an identical, spurious solution.
// For d1 = d2 = d the condition factors as 2 s cos(sd) [sin(sd) + b s cos(sd)],
// so its roots split into the cos(sd) = 0 family (even states) and the
// tan(sd) + b s = 0 family (odd states).
inline double barrier_top_residual(const PotentialSpec& spec, double s) {
  const double d1 = spec.d1(), d2 = spec.d2();
  return 2.0 * spec.b * s * s * std::cos(s * d1) * std::cos(s * d2) +
         s * std::sin(s * (d1 + d2));
}

// Strength v0 of a Dirac delta at x = 0 between walls at -a and c that makes
// E = 0 an eigenvalue: v0 a = -(1 + a/c) in these units.  Only negative
// strengths qualify.
inline double delta_zero_energy_strength(double a, double c) {
  if (!(a > 0.0) || !(c > 0.0))
    throw GeometryError("delta_zero_energy_strength: need a > 0 and c > 0");
  return -(1.0 + a / c) / a;
}

namespace detail {

// sinh(t) e^{-t} and cosh(t) e^{-t} for t >= 0; finite for any t.
inline double sinh_scaled(double t) { return 0.5 * (1.0 - std::exp(-2.0 * t)); }
inline double cosh_scaled(double t) { return 0.5 * (1.0 + std::exp(-2.0 * t)); }

struct Edge {
  double val, der;
};

// Matching system in the homogeneous form  x_i B + y_i C + z_i D = w_i A.
// Rows: psi then psi' continuity at x = -b, then the same at x = +b.
struct MatchingSystem {
  double x[4], y[4], z[4], w[4];
};

// Assemble the system for energy e with bases picked by the sign of (E - V)
// per region.  With `scaled`, hyperbolic entries carry e^{-p b} (inner
// columns) and e^{-kappa d_i} (outer columns); each factor multiplies a whole
// column, so the determinant equals the exact one times a positive factor
// and keeps its zero crossings while never overflowing.
inline MatchingSystem assemble(const PotentialSpec& s, double e, bool scaled) {
  const double b = s.b, d1 = s.d1(), d2 = s.d2();

  Edge left;   // outer-left basis u with u(-a) = 0, evaluated at x = -b
  Edge right;  // outer-right basis w with w(c) = 0, evaluated at x = +b
  const BasisKind outer = classify_branch(e, 0.0);
  switch (outer.branch) {
    case BranchKind::Trig: {
      const double k = outer.omega;
      left = {std::sin(k * d1), k * std::cos(k * d1)};
      right = {-std::sin(k * d2), k * std::cos(k * d2)};
      break;
    }
    case BranchKind::Hyp: {
      const double kap = outer.omega;
      if (scaled) {
        left = {sinh_scaled(kap * d1), kap * cosh_scaled(kap * d1)};
        right = {-sinh_scaled(kap * d2), kap * cosh_scaled(kap * d2)};
      } else {
        left = {std::sinh(kap * d1), kap * std::cosh(kap * d1)};
        right = {-std::sinh(kap * d2), kap * std::cosh(kap * d2)};
      }
      break;
    }
    case BranchKind::Linear:
      left = {d1, 1.0};
      right = {-d2, 1.0};
      break;
  }

  // Inner basis pair (f1, f2) with values and derivatives at -b then +b.
  double f1m, f1pm, f2m, f2pm;
  double f1p, f1pp, f2p, f2pp;
  const BasisKind inner = classify_branch(e, s.v0);
  switch (inner.branch) {
    case BranchKind::Hyp: {
      const double p = inner.omega;
      const double sh = scaled ? sinh_scaled(p * b) : std::sinh(p * b);
      const double ch = scaled ? cosh_scaled(p * b) : std::cosh(p * b);
      f1m = -sh; f1pm = p * ch; f2m = ch; f2pm = -p * sh;
      f1p = sh;  f1pp = p * ch; f2p = ch; f2pp = p * sh;
      break;
    }
    case BranchKind::Trig: {
      const double q = inner.omega;
      const double sn = std::sin(q * b), cs = std::cos(q * b);
      f1m = -sn; f1pm = q * cs; f2m = cs; f2pm = q * sn;
      f1p = sn;  f1pp = q * cs; f2p = cs; f2pp = -q * sn;
      break;
    }
    case BranchKind::Linear:
      f1m = -b; f1pm = 1.0; f2m = 1.0; f2pm = 0.0;
      f1p = b;  f1pp = 1.0; f2p = 1.0; f2pp = 0.0;
      break;
  }

  MatchingSystem m;
  m.x[0] = f1m;  m.y[0] = f2m;  m.z[0] = 0.0;        m.w[0] = left.val;
  m.x[1] = f1pm; m.y[1] = f2pm; m.z[1] = 0.0;        m.w[1] = left.der;
  m.x[2] = f1p;  m.y[2] = f2p;  m.z[2] = -right.val; m.w[2] = 0.0;
  m.x[3] = f1pp; m.y[3] = f2pp; m.z[3] = -right.der; m.w[3] = 0.0;
  return m;
}

inline double det3(double a11, double a12, double a13,
                   double a21, double a22, double a23,
                   double a31, double a32, double a33) {
  return a11 * (a22 * a33 - a23 * a32) - a12 * (a21 * a33 - a23 * a31) +
         a13 * (a21 * a32 - a22 * a31);
}

// Determinant of [x y z -w]; zero iff a nontrivial (A,B,C,D) exists.
inline double consistency_determinant(const MatchingSystem& m) {
  double acc = 0.0;
  const double col[4][4] = {
      {m.x[0], m.x[1], m.x[2], m.x[3]},
      {m.y[0], m.y[1], m.y[2], m.y[3]},
      {m.z[0], m.z[1], m.z[2], m.z[3]},
      {-m.w[0], -m.w[1], -m.w[2], -m.w[3]},
  };
  for (int i = 0; i < 4; ++i) {
    double minor[3][3];
    for (int r = 1; r < 4; ++r) {
      int cc = 0;
      for (int c = 0; c < 4; ++c) {
        if (c == i) continue;
        minor[r - 1][cc++] = col[c][r];
      }
    }
    const double mi = det3(minor[0][0], minor[0][1], minor[0][2],
                           minor[1][0], minor[1][1], minor[1][2],
                           minor[2][0], minor[2][1], minor[2][2]);
    acc += ((i % 2) ? -1.0 : 1.0) * col[i][0] * mi;
  }
  return acc;
}

}  // namespace detail

// Scaled 4x4 matching determinant at energy e.  Its zero crossings are the
// generic eigenvalues.  Throws WindowError inside the exclusion windows at
// e = 0 and e = v0, where the determinant vanishes spuriously and the
// dedicated conditions above must be used instead.
inline Residual matching_determinant(const PotentialSpec& s, double e) {
  const Regime reg = classify_regime(s, e);
  if (reg == Regime::ZeroWindow)
    throw WindowError("matching_determinant: e inside the E = 0 window");
  if (reg == Regime::BarrierTopWindow)
    throw WindowError("matching_determinant: e inside the E = V0 window");
  const auto m = detail::assemble(s, e, /*scaled=*/true);
  return {detail::consistency_determinant(m), reg};
}

// Scalar form of the generic matching condition, expanded from the
// determinant.  Four branch combinations cover all energies away from the
// exclusion windows:
//   0 < e < v0:  k p cosh(2pb) sin(kd) + [e cos(kd) + v0 sin(kd1) sin(kd2)] sinh(2pb)
//   e > max(0,v0): continue p -> iP, which turns cosh/sinh(2pb) into cos/sin(2Pb)
//   e < 0:       continue k -> i kappa, which turns sin/cos(kd) into sinh/cosh(kd)
// (k = sqrt(e), p = sqrt(v0-e), P = sqrt(e-v0), kappa = sqrt(-e), d = d1+d2).
// Hyperbolic growth is divided out by e^{-2pb} and e^{-kappa d}; both factors
// are positive, so roots are unchanged.  Agrees with matching_determinant up
// to a smooth nonzero factor wherever both are defined.
inline double closed_form_residual(const PotentialSpec& s, double e) {
  if (std::fabs(e) <= kSpuriousWindow)
    throw DomainError("closed_form_residual: e inside the E = 0 window");
  if (std::fabs(e - s.v0) <= kSpuriousWindow)
    throw DomainError("closed_form_residual: e inside the E = V0 window");
  const double b = s.b, d1 = s.d1(), d2 = s.d2(), dsum = d1 + d2, v0 = s.v0;

  if (e > 0.0) {
    const double k = std::sqrt(e);
    const double trig = e * std::cos(k * dsum) +
                        v0 * std::sin(k * d1) * std::sin(k * d2);
    if (e < v0) {
      const double p = std::sqrt(v0 - e);
      const double ch = 0.5 * (1.0 + std::exp(-4.0 * p * b));  // cosh(2pb) e^{-2pb}
      const double sh = 0.5 * (1.0 - std::exp(-4.0 * p * b));  // sinh(2pb) e^{-2pb}
      return k * p * ch * std::sin(k * dsum) + trig * sh;
    }
    const double P = std::sqrt(e - v0);
    return k * P * std::cos(2.0 * P * b) * std::sin(k * dsum) +
           trig * std::sin(2.0 * P * b);
  }

  const double kap = std::sqrt(-e);
  const double s1 = detail::sinh_scaled(kap * d1);
  const double s2 = detail::sinh_scaled(kap * d2);
  const double shd = detail::sinh_scaled(kap * dsum);
  const double chd = detail::cosh_scaled(kap * dsum);
  const double hyp = kap * kap * chd + v0 * s1 * s2;  // scaled by e^{-kappa d}
  if (e < v0) {
    const double p = std::sqrt(v0 - e);
    const double ch = 0.5 * (1.0 + std::exp(-4.0 * p * b));
    const double sh = 0.5 * (1.0 - std::exp(-4.0 * p * b));
    return kap * p * shd * ch + hyp * sh;
  }
  const double P = std::sqrt(e - v0);
  return kap * P * shd * std::cos(2.0 * P * b) + hyp * std::sin(2.0 * P * b);
}

}  // namespace boxwell
