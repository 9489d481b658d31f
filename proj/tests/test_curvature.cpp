#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "anglebound/bounds.hpp"
#include "anglebound/curvature.hpp"
#include "anglebound/errors.hpp"
#include "anglebound/miniball.hpp"
#include "oracles.hpp"

using namespace anglebound;
constexpr double pi = std::numbers::pi;

namespace {

std::vector<Point> cube_vertices(int d) {
  std::vector<Point> out;
  for (int mask = 0; mask < (1 << d); ++mask) {
    Point p(d);
    for (int k = 0; k < d; ++k) p[k] = (mask >> k) & 1;
    out.push_back(p);
  }
  return out;
}

double brute_ball_radius(const std::vector<Point>& pts, const Eigen::VectorXd& c) {
  double r = 0.0;
  for (const auto& p : pts) r = std::max(r, (p - c).norm());
  return r;
}

}  // namespace

TEST(Miniball, SimpleShapes) {
  const auto cube = cube_vertices(3);
  const Ball b = min_enclosing_ball(cube);
  EXPECT_NEAR(b.radius, std::sqrt(3.0) / 2, 1e-12);
  EXPECT_NEAR((b.center - Eigen::Vector3d::Constant(0.5)).norm(), 0.0, 1e-12);
  const std::vector<Point> one{Eigen::Vector2d(3, 4)};
  EXPECT_EQ(min_enclosing_ball(one).radius, 0.0);
}

TEST(Miniball, WelzlAndIterativeAgree) {
  std::mt19937_64 gen(29);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + trial % 5;
    std::vector<Point> pts;
    for (int i = 0; i < 30; ++i) pts.push_back(oracle::gaussian(gen, d));
    const Ball w = min_enclosing_ball_welzl(pts);
    const Ball it = min_enclosing_ball_iterative(pts);
    EXPECT_LE(brute_ball_radius(pts, w.center), w.radius * (1 + 1e-9));
    EXPECT_NEAR(w.radius, it.radius, 1e-6 * w.radius);
    // Optimality: nudging the center never helps.
    for (int k = 0; k < 10; ++k) {
      const Eigen::VectorXd c = w.center + 1e-4 * oracle::gaussian(gen, d);
      EXPECT_GE(brute_ball_radius(pts, c), w.radius - 1e-12);
    }
  }
}

TEST(MinEnclosingCap, OrthonormalTriple) {
  const std::vector<UnitVector> e{UnitVector(Eigen::Vector3d(1, 0, 0)), UnitVector(Eigen::Vector3d(0, 1, 0)),
                                  UnitVector(Eigen::Vector3d(0, 0, 1))};
  const SphericalCap cap = min_enclosing_cap(e);
  EXPECT_NEAR(cap.radius.radians(), 0.9553166181245093, 1e-12);
  for (const auto& h : e) EXPECT_TRUE(cap.contains(h));
}

namespace {

// Smallest cap through at most three support directions of H on S^2.
double brute_cap_radius(const std::vector<UnitVector>& h) {
  const auto covers = [&](const Eigen::Vector3d& c, double r) {
    for (const auto& u : h)
      if (std::acos(std::clamp(u.coords().dot(c), -1.0, 1.0)) > r + 1e-12) return false;
    return true;
  };
  double best = pi;
  const std::size_t n = h.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (covers(h[i].coords(), 0.0)) best = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const Eigen::Vector3d mid = (h[i].coords() + h[j].coords()).normalized();
      const double r = std::acos(std::clamp(mid.dot(h[i].coords()), -1.0, 1.0));
      if (covers(mid, r)) best = std::min(best, r);
      for (std::size_t k = j + 1; k < n; ++k) {
        const Eigen::Vector3d a = h[i].coords(), b = h[j].coords(), c = h[k].coords();
        Eigen::Vector3d normal = (b - a).cross(c - a);
        if (normal.norm() < 1e-12) continue;
        normal.normalize();
        if (normal.dot(a) < 0) normal = -normal;
        const double rr = std::acos(std::clamp(normal.dot(a), -1.0, 1.0));
        if (covers(normal, rr)) best = std::min(best, rr);
      }
    }
  }
  return best;
}

}  // namespace

TEST(MinEnclosingCap, OptimalOnSmallInputs) {
  std::mt19937_64 gen(37);
  for (int trial = 0; trial < 300; ++trial) {
    const Eigen::VectorXd pole = oracle::sphere_point(gen, 3);
    std::vector<UnitVector> h;
    for (int i = 0; i < 2 + trial % 6; ++i) h.push_back(UnitVector::normalized(pole + 0.6 * oracle::gaussian(gen, 3)));
    const SphericalCap cap = min_enclosing_cap(h);
    for (const auto& u : h) EXPECT_TRUE(cap.contains(u));
    EXPECT_NEAR(cap.radius.radians(), brute_cap_radius(h), 1e-9) << trial;
  }
}

TEST(MinEnclosingCap, NotHemispherical) {
  const std::vector<UnitVector> opposite{UnitVector(Eigen::Vector2d(1, 0)), UnitVector(Eigen::Vector2d(-1, 0))};
  try {
    min_enclosing_cap(opposite);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotHemispherical);
  }
}

TEST(Dekster, RadiusFormulaAndContainment) {
  EXPECT_EQ(dekster_radius(Angle(0.0), 2).radians(), 0.0);
  EXPECT_NEAR(dekster_radius(Angle(pi / 2), 2).radians(), 0.9553166181245093, 1e-14);
  std::mt19937_64 gen(31);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int d = 2 + trial % 2;
    const Eigen::VectorXd pole = oracle::sphere_point(gen, d + 1);
    std::vector<UnitVector> h;
    const double spread = 0.2 + 1.2 * (trial % 7) / 7.0;
    for (int i = 0; i < 3 + trial % 9; ++i) {
      const Eigen::VectorXd v = pole + spread * oracle::gaussian(gen, d + 1);
      h.push_back(UnitVector::normalized(v));
    }
    const Angle diam = geodesic_diameter(h);
    if (diam.radians() > theta_d(d).radians()) continue;
    const SphericalCap cap = min_enclosing_cap(h);
    EXPECT_LE(cap.radius.radians(), dekster_radius(diam, d).radians() + 1e-7);
    ++checked;
  }
  EXPECT_GT(checked, 150);
}

TEST(Cone, Containment) {
  const Cone c(Eigen::Vector2d(0, 0), UnitVector(Eigen::Vector2d(1, 0)), Angle(pi / 4));
  EXPECT_TRUE(c.contains(Eigen::Vector2d(0, 0)));
  EXPECT_TRUE(c.contains(Eigen::Vector2d(1, 1)));
  EXPECT_FALSE(c.contains(Eigen::Vector2d(1, 1.01)));
  EXPECT_THROW(Cone(Eigen::Vector2d(0, 0), UnitVector(Eigen::Vector2d(1, 0)), Angle(pi / 2)), Error);
}

TEST(GaussBonnet, SquareAndCube) {
  const auto sq = gauss_bonnet_sum(PointSet(2, cube_vertices(2)), 1 << 18, 9);
  std::int64_t total = 0;
  for (auto c : sq.counts) total += c;
  EXPECT_EQ(total, sq.samples);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(sq.fractions[i], 0.25, 4 * sq.std_error[i]);
  const auto cube = gauss_bonnet_sum(PointSet(3, cube_vertices(3)), 1 << 18, 9);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(cube.fractions[i], 0.125, 4 * cube.std_error[i]);
}

TEST(GaussBonnet, ThreadCountDoesNotChangeCounts) {
  const PointSet s(3, cube_vertices(3));
  const auto a = gauss_bonnet_sum(s, 50000, 4, 1);
  const auto b = gauss_bonnet_sum(s, 50000, 4, 3);
  EXPECT_EQ(a.counts, b.counts);
}

TEST(GaussBonnet, Preconditions) {
  std::vector<Point> pts = cube_vertices(2);
  pts.push_back(Eigen::Vector2d(0.5, 0.5));
  EXPECT_THROW(gauss_bonnet_sum(PointSet(2, pts), 10000, 1), Error);
  const std::vector<Point> flat{Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 1), Eigen::Vector2d(3, 3)};
  EXPECT_THROW(gauss_bonnet_sum(PointSet(2, flat), 10000, 1), Error);
  EXPECT_THROW(gauss_bonnet_sum(PointSet(2, cube_vertices(2)), 10, 1), Error);
}

TEST(GaussBonnet, AgreesWithPerVertexEstimates) {
  std::mt19937_64 gen(43);
  for (int dim = 2; dim <= 4; ++dim) {
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Point> pts;
      for (int i = 0; i < 5 + 3 * trial; ++i) pts.push_back(oracle::sphere_point(gen, dim));
      const PointSet s(dim, pts);
      const auto all = gauss_bonnet_sum(s, 100000, 100 + trial);
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto one = normal_cone_fraction_mc(s, i, 100000, 200 + trial);
        const double sigma = std::hypot(all.std_error[i], one.std_error);
        EXPECT_NEAR(all.fractions[i], one.fraction, 4 * sigma + 1e-12);
      }
    }
  }
}

TEST(ConeCover, EndToEndWithCardinalityBound) {
  std::mt19937_64 gen(47);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 60; ++trial) {
    const int dim = 2 + trial % 3;
    std::vector<Point> pts;
    for (int i = 0; i < dim + 1 + trial % 4; ++i) pts.push_back(oracle::sphere_point(gen, dim));
    const PointSet s(dim, pts);
    const double a = max_angle(s).radians();
    if (!(a < theta_d(dim - 1).radians() - 1e-9)) continue;
    const Angle theta(a);
    EXPECT_EQ(cone_cover_certificate(s, eta_of_theta(theta, dim - 1)).size(), pts.size());
    EXPECT_LE(static_cast<double>(pts.size()), cardinality_bound(theta, dim).bound + 1e-9);
    ++checked;
  }
  EXPECT_GE(checked, 30);
}

TEST(NormalCone, SingleVertexMatchesExteriorAngle) {
  const std::vector<Point> tri{Eigen::Vector2d(0, 0), Eigen::Vector2d(2, 0), Eigen::Vector2d(0.5, 1.5)};
  const auto expected = oracle::polygon_exterior_fractions(tri);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto f = normal_cone_fraction_mc(PointSet(2, tri), i, 200000, 3);
    EXPECT_NEAR(f.fraction, expected[i], 4 * f.std_error + 1e-12);
  }
}

TEST(NormalCone, ConeLikePolytopeMatchesFraction) {
  // Triangle with apex angle 2 eta at the origin: the normal cone there is f_1(eta).
  const double eta = 0.4;
  const std::vector<Point> tri{Eigen::Vector2d(0, 0), Eigen::Vector2d(std::cos(eta), std::sin(eta)),
                               Eigen::Vector2d(std::cos(eta), -std::sin(eta))};
  const auto f = normal_cone_fraction_mc(PointSet(2, tri), 0, 400000, 8);
  EXPECT_NEAR(f.fraction, f_fraction(1, Angle(eta)).value, 4 * f.std_error);
  // Apex plus a fine polygon on the cap boundary approximates the round cone in R^3.
  std::vector<Point> cone{Eigen::Vector3d(0, 0, 0)};
  for (int k = 0; k < 256; ++k) {
    const double phi = 2 * pi * k / 256;
    cone.push_back(Eigen::Vector3d(std::cos(eta), std::sin(eta) * std::cos(phi), std::sin(eta) * std::sin(phi)));
  }
  const auto g = normal_cone_fraction_mc(PointSet(3, cone), 0, 400000, 8);
  EXPECT_NEAR(g.fraction, f_fraction(2, Angle(eta)).value, 4 * g.std_error + 1e-4);
}

TEST(ConeCover, CertifiesSmallAngleSets) {
  const std::vector<Point> sq = cube_vertices(2);
  const auto cones = cone_cover_certificate(PointSet(2, sq), Angle(pi / 4));
  ASSERT_EQ(cones.size(), 4u);
  for (const auto& c : cones)
    for (const auto& v : sq) EXPECT_TRUE(c.contains(v));
  const Angle eta = dekster_radius(Angle(pi / 2), 1);
  EXPECT_NEAR(eta.radians(), pi / 4, 1e-12);
}

TEST(ConeCover, TooSmallReportsVertex) {
  try {
    cone_cover_certificate(PointSet(2, cube_vertices(2)), Angle(0.5));
    FAIL();
  } catch (const CapTooSmallError& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapTooSmall);
    EXPECT_NEAR(e.required_radius(), pi / 4, 1e-9);
  }
}
