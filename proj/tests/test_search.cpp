#include <cmath>

#include <gtest/gtest.h>

#include "anglebound/bounds.hpp"
#include "anglebound/errors.hpp"
#include "anglebound/search.hpp"
#include "oracles.hpp"

using namespace anglebound;
constexpr double pi = std::numbers::pi;

TEST(SoftMax, ApproachesMaxAngle) {
  const std::vector<Point> sq{Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0), Eigen::Vector2d(1, 1),
                              Eigen::Vector2d(0, 1)};
  const double exact = pi / 2;
  const double loose = soft_max_angle(sq, 10.0);
  const double sharp = soft_max_angle(sq, 1e4);
  EXPECT_GE(loose, exact);
  EXPECT_NEAR(sharp, exact, 1e-2);
  EXPECT_LT(sharp, loose);
}

TEST(WarmStarts, SizesMatch) {
  for (const auto& s : warm_starts(4, 3)) EXPECT_EQ(s.size(), 4u);
  for (const auto& s : warm_starts(8, 3)) EXPECT_EQ(s.size(), 8u);
  EXPECT_FALSE(warm_starts(8, 3).empty());
}

TEST(MinimizeMaxAngle, Triangle) {
  const SearchResult r = minimize_max_angle(3, 2, 500, 2, 1);
  EXPECT_LE(r.achieved_angle.radians(), pi / 3 + 1e-3);
  EXPECT_NEAR(oracle::brute_max_angle({r.points.begin(), r.points.end()}), r.achieved_angle.radians(), 1e-12);
}

TEST(MinimizeMaxAngle, SquareInPlane) {
  const SearchResult r = minimize_max_angle(4, 2, 1500, 2, 3);
  EXPECT_LE(r.achieved_angle.radians(), pi / 2 + 1e-3);
  EXPECT_GE(r.achieved_angle.radians(), pi / 2 - 1e-9);
}

TEST(MinimizeMaxAngle, Deterministic) {
  const SearchResult a = minimize_max_angle(5, 3, 300, 2, 77);
  const SearchResult b = minimize_max_angle(5, 3, 300, 2, 77);
  ASSERT_EQ(a.points.size(), b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) EXPECT_EQ(a.points[i], b.points[i]);
  EXPECT_EQ(a.achieved_angle, b.achieved_angle);
}

TEST(MaxCardinality, RespectsAngleAndBound) {
  const Angle theta(pi / 2);
  const SearchResult r = max_cardinality_search(theta, 2, 4000, 5);
  EXPECT_LE(r.achieved_angle.radians(), theta.radians());
  EXPECT_EQ(r.points.size(), 4u);
  const SearchResult s = max_cardinality_search(theta, 3, 6000, 5);
  EXPECT_GE(s.points.size(), 8u);
  EXPECT_LE(static_cast<double>(s.points.size()), cardinality_bound(s.achieved_angle, 3).bound + 1e-9);
}

TEST(MaxCardinality, Preconditions) {
  EXPECT_THROW(max_cardinality_search(Angle(pi / 2), 0, 100, 1), Error);
  EXPECT_THROW(minimize_max_angle(2, 2, 100, 1, 1), Error);
}

TEST(MinimizeMaxAngle, NondecreasingInN) {
  for (int dim = 2; dim <= 3; ++dim) {
    double prev = 0.0;
    for (int n = 3; n <= 8; ++n) {
      const SearchResult r = minimize_max_angle(n, dim, 1500, 3, 50 + n);
      EXPECT_LE(max_angle(r.points).radians(), r.achieved_angle.radians());
      EXPECT_GE(r.achieved_angle.radians(), prev - 1e-9) << "D=" << dim << " n=" << n;
      prev = r.achieved_angle.radians();
    }
  }
}

TEST(MaxCardinality, SoundAcrossAngles) {
  for (double deg : {70.0, 95.0, 110.0}) {
    const Angle theta = Angle::from_degrees(deg);
    const SearchResult r = max_cardinality_search(theta, 3, 2000, 9);
    EXPECT_LE(max_angle(r.points).radians(), theta.radians());
    EXPECT_EQ(max_angle(r.points), r.achieved_angle);
  }
}
