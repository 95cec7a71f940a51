#include <cmath>
#include <random>
#include <vector>

#include "boxwell/conditions.hpp"
#include "boxwell/rootfind.hpp"
#include "doctest.h"

using namespace boxwell;

namespace {
const PotentialSpec kSym10 = make_spec(3, 1, 3, 10.0);
const PotentialSpec kSymHole = make_spec(3, 1, 3, -5.0);
const PotentialSpec kAsym = make_spec(2, 1, 3, -5.0);

bool sign_change_near(const PotentialSpec& s, double e0, double half) {
  const double lo = matching_determinant(s, e0 - half).value;
  const double hi = matching_determinant(s, e0 + half).value;
  return (lo > 0) != (hi > 0);
}
}  // namespace

TEST_CASE("zero-energy barrier condition is positive definite") {
  CHECK(zero_energy_barrier_residual(kSym10, 1.0) > 0.0);
  // small-q expansion: residual ~ q (d1 + d2 + 2b)
  const auto s = make_spec(3, 1, 3, 10.0);
  const double q = 1e-7;
  CHECK(zero_energy_barrier_residual(s, q) / q ==
        doctest::Approx(s.d1() + s.d2() + 2 * s.b).epsilon(1e-8));
  for (double qq = 0.05; qq < 8.0; qq += 0.05)
    CHECK(zero_energy_barrier_residual(s, qq) > 0.0);
}

TEST_CASE("zero-energy hole condition vanishes at the tabulated depths") {
  CHECK(std::fabs(zero_energy_hole_residual(kSymHole, std::sqrt(0.4267))) < 1e-3);
  CHECK(std::fabs(zero_energy_hole_residual(kSymHole, std::sqrt(3.3730))) < 2e-3);
  CHECK(std::fabs(zero_energy_hole_residual(kAsym, std::sqrt(0.5695))) < 1e-3);
  // r = 0 solves the condition identically (a spurious root; scans skip it);
  // the residual leaves zero with slope d1 + d2 + 2b
  CHECK(std::fabs(zero_energy_hole_residual(kSymHole, 1e-8)) < 1e-6);
  CHECK(zero_energy_hole_residual(kSymHole, 1e-8) / 1e-8 ==
        doctest::Approx(kSymHole.d() + 2 * kSymHole.b).epsilon(1e-8));
}

TEST_CASE("hole condition is symmetric under d1 <-> d2") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> len(0.1, 5.0);
  std::uniform_real_distribution<double> rr(0.05, 4.0);
  for (int i = 0; i < 200; ++i) {
    const double b = len(rng), d1 = len(rng), d2 = len(rng), r = rr(rng);
    const auto s1 = make_spec(b + d1, b, b + d2, -1.0);
    const auto s2 = make_spec(b + d2, b, b + d1, -1.0);
    CHECK(zero_energy_hole_residual(s1, r) ==
          doctest::Approx(zero_energy_hole_residual(s2, r)).epsilon(1e-14));
  }
}

TEST_CASE("barrier-top condition vanishes at the tabulated heights") {
  CHECK(std::fabs(barrier_top_residual(kSym10, std::sqrt(0.6168))) < 1e-3);
  CHECK(std::fabs(barrier_top_residual(kAsym, std::sqrt(0.8753))) < 1e-3);
}

TEST_CASE("symmetric barrier-top roots split into the cos and tan families") {
  // d1 = d2 = 2, b = 1: the condition factors as 2 s cos(2s)[sin(2s)+s cos(2s)]
  const auto s = make_spec(3, 1, 3, 1.0);
  auto full = [&](double w) { return barrier_top_residual(s, w); };
  std::vector<double> roots;
  for (const auto& [lo, hi] : scan_brackets(full, 0.1, 5.0, 1e-4))
    roots.push_back(refine(full, lo, hi).refined);
  REQUIRE(roots.size() >= 4);
  int cos_family = 0, tan_family = 0;
  for (double w : roots) {
    const double cosv = std::cos(w * 2.0);
    if (std::fabs(cosv) < 1e-8) {
      ++cos_family;
    } else {
      CHECK(std::fabs(std::tan(w * 2.0) + w) < 1e-8);
      ++tan_family;
    }
  }
  CHECK(cos_family >= 2);
  CHECK(tan_family >= 2);

  // away from the cos poles the roots are exactly those of tan(sd) + bs = 0
  auto tanform = [](double w) { return std::sin(2.0 * w) + w * std::cos(2.0 * w); };
  for (double w : roots) {
    if (std::fabs(std::cos(2.0 * w)) < 1e-6) continue;
    CHECK(std::fabs(tanform(w)) < 1e-8);
  }
}

TEST_CASE("matching determinant reproduces the empty-box modes") {
  const auto box = make_spec(3, 1, 3, 0.0);
  const double unit = std::numbers::pi * std::numbers::pi / 36.0;
  auto f = [&](double e) { return matching_determinant(box, e).value; };
  for (int n = 1; n <= 6; ++n) {
    const double e = n * n * unit;
    const auto root = refine(f, e - 1e-3, e + 1e-3);
    CHECK(std::fabs(root.refined - e) < 1e-6);
  }
}

TEST_CASE("matching determinant vanishes at tabulated generic levels") {
  CHECK(sign_change_near(kSym10, 1.8201, 1e-3));
  CHECK(sign_change_near(kSym10, 1.8260, 1e-3));
  CHECK(sign_change_near(kSymHole, -3.8520, 1e-3));
  CHECK(sign_change_near(kSymHole, -0.8965, 1e-3));
}

TEST_CASE("matching determinant refuses the spurious windows") {
  CHECK_THROWS_AS(matching_determinant(kSym10, 0.0), WindowError);
  CHECK_THROWS_AS(matching_determinant(kSym10, 9e-7), WindowError);
  CHECK_THROWS_AS(matching_determinant(kSym10, 10.0), WindowError);
  CHECK_THROWS_AS(matching_determinant(kSym10, 10.0 - 9e-7), WindowError);
  CHECK_NOTHROW(matching_determinant(kSym10, 2e-6));
}

TEST_CASE("regime labels") {
  CHECK(matching_determinant(kSym10, -1.0).regime == Regime::BelowZero);
  CHECK(matching_determinant(kSym10, 5.0).regime == Regime::Mid);
  CHECK(matching_determinant(kSym10, 11.0).regime == Regime::AboveBarrier);
  CHECK(matching_determinant(kSymHole, -6.0).regime == Regime::BelowZero);
  CHECK(matching_determinant(kSymHole, -2.0).regime == Regime::Mid);
  CHECK(matching_determinant(kSymHole, 1.0).regime == Regime::AboveBarrier);
  CHECK(classify_regime(kSym10, 5e-7) == Regime::ZeroWindow);
  CHECK(classify_regime(kSym10, 10.0 + 5e-7) == Regime::BarrierTopWindow);
}

TEST_CASE("determinant stays finite for deep holes and high barriers") {
  const auto deep = make_spec(3, 1, 3, -4e4);
  CHECK(std::isfinite(matching_determinant(deep, -3.9e4).value));
  CHECK(std::isfinite(matching_determinant(deep, -1.0).value));
  const auto tall = make_spec(3, 1, 3, 4e4);
  CHECK(std::isfinite(matching_determinant(tall, 1.0).value));
  CHECK(std::isfinite(closed_form_residual(deep, -3.9e4)));
  CHECK(std::isfinite(closed_form_residual(tall, 1.0)));
}

TEST_CASE("closed-form condition vanishes at tabulated levels") {
  auto f10 = [&](double e) { return closed_form_residual(kSym10, e); };
  CHECK((f10(1.8201 - 1e-3) > 0) != (f10(1.8201 + 1e-3) > 0));
  auto fh = [&](double e) { return closed_form_residual(kSymHole, e); };
  CHECK((fh(-0.8965 - 1e-3) > 0) != (fh(-0.8965 + 1e-3) > 0));
  CHECK((fh(-3.8520 - 1e-3) > 0) != (fh(-3.8520 + 1e-3) > 0));
}

TEST_CASE("closed-form condition excludes the spurious energies") {
  CHECK_THROWS_AS(closed_form_residual(kSym10, 0.0), DomainError);
  CHECK_THROWS_AS(closed_form_residual(kSym10, 10.0), DomainError);
  CHECK_THROWS_AS(closed_form_residual(kSymHole, -5.0), DomainError);
}

TEST_CASE("closed form and determinant change sign at the same places") {
  // sub-barrier range of the symmetric double well, grid step 1e-3
  std::vector<double> det_flips, cf_flips;
  double prev_d = 0, prev_c = 0;
  bool have = false;
  for (double e = 1e-3; e < 10.0 - 2e-6; e += 1e-3) {
    const double dv = matching_determinant(kSym10, e).value;
    const double cv = closed_form_residual(kSym10, e);
    if (have) {
      if ((prev_d > 0) != (dv > 0)) det_flips.push_back(e);
      if ((prev_c > 0) != (cv > 0)) cf_flips.push_back(e);
    }
    prev_d = dv;
    prev_c = cv;
    have = true;
  }
  REQUIRE(det_flips.size() == cf_flips.size());
  for (size_t i = 0; i < det_flips.size(); ++i)
    CHECK(det_flips[i] == doctest::Approx(cf_flips[i]).epsilon(1e-12));
  CHECK(det_flips.size() == 4);  // doublet pair + 6.9444 + 7.0626 below v0=10
}

TEST_CASE("closed form matches determinant sign changes below zero") {
  double prev_d = 0, prev_c = 0;
  bool have = false;
  int mismatches = 0;
  for (double e = -4.99; e < -1e-2; e += 1e-3) {
    const double dv = matching_determinant(kSymHole, e).value;
    const double cv = closed_form_residual(kSymHole, e);
    if (have && ((prev_d > 0) != (dv > 0)) != ((prev_c > 0) != (cv > 0)))
      ++mismatches;
    prev_d = dv;
    prev_c = cv;
    have = true;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("delta strength for a zero-energy state") {
  CHECK(delta_zero_energy_strength(1, 1) == -2.0);
  CHECK(delta_zero_energy_strength(2, 1) == doctest::Approx(-1.5).epsilon(1e-15));
  CHECK(delta_zero_energy_strength(1, 1e9) == doctest::Approx(-1.0).epsilon(1e-8));
  CHECK_THROWS_AS(delta_zero_energy_strength(0, 1), GeometryError);
  CHECK_THROWS_AS(delta_zero_energy_strength(1, -2), GeometryError);
}

TEST_CASE("delta strength satisfies the jump condition of the linear pieces") {
  // psi_< = A(x+a), psi_> = B(x-c); continuity gives B = -a A / c and the
  // derivative jump at the delta gives B - A = v0 A a
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> len(0.2, 5.0);
  for (int i = 0; i < 200; ++i) {
    const double a = len(rng), c = len(rng);
    const double v0 = delta_zero_energy_strength(a, c);
    const double A = 1.0, B = -a / c;
    CHECK(B - A == doctest::Approx(v0 * A * a).epsilon(1e-12));
  }
}
