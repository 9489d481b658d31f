#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "anglebound/bounds.hpp"
#include "anglebound/errors.hpp"
#include "anglebound/quadrature.hpp"
#include "oracles.hpp"

using namespace anglebound;
constexpr double pi = std::numbers::pi;

TEST(Quadrature, Polynomials) {
  const auto r = adaptive_simpson([](double x) { return x * x * x; }, 0.0, 2.0);
  EXPECT_NEAR(r.value, 4.0, 1e-14);
  const auto s = adaptive_simpson([](double x) { return std::sin(x); }, 0.0, pi);
  EXPECT_NEAR(s.value, 2.0, 1e-12);
  EXPECT_LE(s.abs_error_estimate, 1e-10);
  EXPECT_EQ(adaptive_simpson([](double) { return 1.0; }, 1.0, 1.0).value, 0.0);
}

TEST(Quadrature, PanelCapStillReportsError) {
  SimpsonOptions opts;
  opts.max_panels = 64;
  opts.abs_tolerance = 1e-18;
  const auto r = adaptive_simpson([](double x) { return std::sqrt(x); }, 0.0, 1.0, opts);
  EXPECT_LE(r.panels, 64);
  EXPECT_NEAR(r.value, 2.0 / 3.0, 1e-3);
  EXPECT_GT(r.abs_error_estimate, 0.0);
}

TEST(ThetaD, KnownValues) {
  EXPECT_NEAR(theta_d(1).radians(), pi, 1e-15);
  EXPECT_NEAR(theta_d(2).radians(), 2 * pi / 3, 1e-15);
  EXPECT_NEAR(theta_d(3).radians(), 1.9106332362490186, 1e-15);
  for (int d = 1; d < 30; ++d) {
    EXPECT_NEAR(half_theta_d_sine(d), std::sin(theta_d(d).radians() / 2), 1e-15);
    EXPECT_GT(theta_d(d).radians(), theta_d(d + 1).radians());
  }
  EXPECT_THROW(theta_d(0), Error);
}

TEST(Eta, KnownValues) {
  EXPECT_NEAR(eta_of_theta(Angle(pi / 2), 2).radians(), 0.9553166181245093, 1e-14);
  EXPECT_NEAR(eta_of_theta(theta_d(3), 3).radians(), pi / 2, 1e-7);
  EXPECT_NEAR(eta_of_theta(Angle(pi / 3), 1).radians(), pi / 6, 1e-15);
  EXPECT_THROW(eta_of_theta(Angle(2.2), 2), Error);
  EXPECT_THROW(eta_of_theta(Angle(0.0), 2), Error);
}

TEST(FFraction, ClosedForms) {
  for (int k = 0; k <= 40; ++k) {
    const double eta = (pi / 2) * k / 40;
    EXPECT_NEAR(f_fraction(1, Angle(eta)).value, oracle::f1(eta), 1e-12);
    EXPECT_NEAR(f_fraction(2, Angle(eta)).value, oracle::f2(eta), 1e-12);
    EXPECT_NEAR(f_fraction(3, Angle(eta)).value, oracle::f3(eta), 1e-12);
  }
  EXPECT_NEAR(f_fraction(3, Angle(0.5)).value, 0.20692079020752277, 1e-13);
  EXPECT_NEAR(f_fraction(2, Angle(0.3)).value, 0.35223989666933021, 1e-13);
}

TEST(FFraction, Endpoints) {
  for (int d = 1; d < 12; ++d) {
    EXPECT_NEAR(f_fraction(d, Angle(0.0)).value, 0.5, 1e-12);
    EXPECT_EQ(f_fraction(d, Angle(pi / 2)).value, 0.0);
  }
  EXPECT_THROW(f_fraction(2, Angle(2.0)), Error);
}

TEST(FFraction, LogScaledBranchAgreesWithDirect) {
  // d = 61 takes the log-space route; compare against a direct Simpson run.
  const double eta = 0.2;
  const auto integrand = [](double t) { return std::pow(std::sin(t), 60.0); };
  const double num = adaptive_simpson(integrand, 0.0, pi / 2 - eta).value;
  const double den = adaptive_simpson(integrand, 0.0, pi).value;
  EXPECT_NEAR(f_fraction(61, Angle(eta)).value / (num / den), 1.0, 1e-9);
  const double tiny = f_fraction(400, Angle(1.0)).value;
  EXPECT_GT(tiny, 0.0);
  EXPECT_LT(tiny, 1e-100);
}

TEST(CardinalityBound, SharpPlanarValues) {
  EXPECT_NEAR(cardinality_bound(Angle(1e-12), 2).bound, 2.0, 1e-9);
  EXPECT_NEAR(cardinality_bound(Angle(pi / 3), 2).bound, 3.0, 1e-9);
  EXPECT_NEAR(cardinality_bound(Angle(pi / 2), 2).bound, 4.0, 1e-9);
  const BoundReport hex = cardinality_bound(Angle(2 * pi / 3), 2);
  EXPECT_NEAR(hex.bound, 6.0, 1e-9);
  EXPECT_FALSE(hex.theorem_applicable);
  EXPECT_FALSE(cardinality_bound(Angle::from_degrees(120), 2).theorem_applicable);
  EXPECT_TRUE(cardinality_bound(Angle::from_degrees(119.9), 2).theorem_applicable);
}

TEST(CardinalityBound, SpatialRightAngle) {
  const BoundReport r = cardinality_bound(Angle(pi / 2), 3);
  EXPECT_NEAR(r.bound, 10.898979485566356, 1e-10);
  EXPECT_TRUE(r.theorem_applicable);
  EXPECT_EQ(r.ambient_dim, 3);
}

TEST(CardinalityBound, InfiniteAtThetaDMinusOne) {
  const BoundReport r = cardinality_bound(theta_d(2), 3);
  EXPECT_EQ(r.bound, std::numeric_limits<double>::infinity());
  EXPECT_FALSE(r.theorem_applicable);
  EXPECT_THROW(cardinality_bound(Angle(pi / 2), 1), Error);
}

TEST(Envelope, ValuesAndOverflow) {
  EXPECT_NEAR(asymptotic_envelope(2), 15.503138340149910, 1e-11);
  for (int d = 2; d <= 40; ++d) {
    const double b = cardinality_bound(Angle(pi / 2), d + 1).bound;
    EXPECT_LE(b, 1.5 * asymptotic_envelope(d)) << d;
  }
  EXPECT_THROW(asymptotic_envelope(400), Error);
}

TEST(CardinalityBound, HypercubeNotContradicted) {
  for (int dim = 2; dim <= 10; ++dim) {
    EXPECT_GE(cardinality_bound(Angle(pi / 2), dim).bound, std::pow(2.0, dim) - 1e-9) << dim;
  }
}
