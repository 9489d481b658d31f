#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "anglebound/coloring.hpp"
#include "anglebound/erdos_furedi.hpp"
#include "anglebound/errors.hpp"
#include "anglebound/lines.hpp"
#include "oracles.hpp"

using namespace anglebound;
constexpr double pi = std::numbers::pi;

namespace {

LineArrangement planar_lines(int m) {
  std::vector<UnitVector> lines;
  for (int k = 0; k < m; ++k) {
    const double a = pi * k / m;
    lines.emplace_back(Eigen::Vector2d(std::cos(a), std::sin(a)));
  }
  return LineArrangement(2, lines);
}

}  // namespace

TEST(Lines, AngleAndOrientation) {
  const UnitVector u(Eigen::Vector2d(1, 0));
  const UnitVector v(Eigen::Vector2d(-1, 0));
  EXPECT_EQ(line_angle(u, v).radians(), 0.0);
  const UnitVector w = UnitVector::normalized(Eigen::Vector2d(-1, 1));
  EXPECT_NEAR(line_angle(u, w).radians(), pi / 4, 1e-15);
  EXPECT_GT(canonical_orientation(v)[0], 0.0);
  EXPECT_NEAR(planar_lines(3).min_pairwise_angle().radians(), pi / 3, 1e-15);
  EXPECT_EQ(planar_lines(1).min_pairwise_angle().radians(), pi / 2);
}

TEST(PackLines, PlanarOptimum) {
  const LineArrangement a = pack_lines(3, 2, 2000, 1);
  EXPECT_GE(a.min_pairwise_angle().radians(), pi / 3 - 1e-6);
  const LineArrangement b = pack_lines(3, 3, 2000, 1);
  EXPECT_GE(b.min_pairwise_angle().radians(), pi / 2 - 1e-6);
  EXPECT_THROW(pack_lines(0, 2, 10, 1), Error);
}

TEST(PackLines, NeverBeatsKnownOptimum) {
  EXPECT_LE(pack_lines(2, 2, 500, 3).min_pairwise_angle().radians(), pi / 2 + 1e-12);
  EXPECT_LE(pack_lines(3, 2, 500, 3).min_pairwise_angle().radians(), pi / 3 + 1e-12);
}

TEST(EfDoubling, FromPackedLines) {
  for (int m = 2; m <= 4; ++m) {
    const LineArrangement lines = pack_lines(m, 3, 1000, 5);
    const double rho = 0.9 * lines.min_pairwise_angle().radians();
    const PointSet s = ef_doubling(lines, Angle(rho));
    EXPECT_EQ(s.size(), std::size_t{1} << m);
    EXPECT_LE(oracle::brute_max_angle({s.begin(), s.end()}), pi - rho + 1e-12);
  }
}

TEST(PackLines, DeterministicAcrossThreads) {
  const LineArrangement a = pack_lines(6, 3, 500, 12, PackOptions{4, 1});
  const LineArrangement b = pack_lines(6, 3, 500, 12, PackOptions{4, 3});
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].coords(), b[i].coords());
  // Six lines in R^3 can reach the icosahedral optimum arctan 2.
  EXPECT_GE(a.min_pairwise_angle().radians(), std::atan(2.0) - 1e-3);
}

TEST(CoverLines, PlanarExact) {
  const CoverReport r = cover_lines(Angle(pi / 3), 2, 1);
  EXPECT_EQ(r.arrangement.size(), 3u);
  EXPECT_LE(r.max_probe_angle, pi / 6 + 1e-12);
}

TEST(CoverLines, SpatialProbesCovered) {
  CoverOptions opts;
  opts.probes = 20000;
  const CoverReport r = cover_lines(Angle(1.0), 3, 2, opts);
  EXPECT_LE(r.max_probe_angle, 0.5 + 1e-12);
  // Fresh probes with a different seed should be covered up to the probe spacing.
  for (const auto& d : probe_lines(3, 5000, 99)) {
    EXPECT_LT(r.arrangement.first_line_within(d, 0.5 + 2 * r.probe_spacing), r.arrangement.size());
  }
}

TEST(Coloring, OddCycleRoutesAgree) {
  std::mt19937_64 gen(41);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 1 + trial % 3;
    const std::size_t n = (std::size_t{1} << m) + 1 + trial % 3;
    EdgeColoring c(n, m);
    std::uniform_int_distribution<int> pick(0, m - 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) c.set(i, j, pick(gen));
    const MonochromaticCycle cyc = find_mono_odd_cycle(c);
    EXPECT_TRUE(is_monochromatic_odd_cycle(c, cyc));
    const auto parity = odd_cycle_by_parity_labels(c);
    ASSERT_TRUE(parity);
    EXPECT_TRUE(is_monochromatic_odd_cycle(c, *parity));
  }
}

TEST(Coloring, BipartiteClassesHaveNoOddCycle) {
  // K_4 split into two bipartite color classes: 4 = 2^2 so the hypothesis fails.
  EdgeColoring c(4, 2);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) c.set(i, j, (i % 2 != j % 2) ? 0 : 1);
  EXPECT_FALSE(odd_cycle_in_color(c, 0));
  EXPECT_FALSE(odd_cycle_in_color(c, 1));
  EXPECT_THROW(find_mono_odd_cycle(c), Error);
  EdgeColoring partial(5, 1);
  EXPECT_FALSE(partial.complete());
  EXPECT_THROW(partial.color(0, 1), Error);
}

TEST(EfDoubling, PlanarCases) {
  const PointSet eight = ef_doubling(planar_lines(3), Angle(1.0));
  EXPECT_EQ(eight.size(), 8u);
  EXPECT_LE(oracle::brute_max_angle({eight.begin(), eight.end()}), pi - 1.0 + 1e-12);
  const PointSet four = ef_doubling(planar_lines(2), Angle(1.4));
  EXPECT_EQ(four.size(), 4u);
  EXPECT_LE(oracle::brute_max_angle({four.begin(), four.end()}), pi - 1.4 + 1e-12);
  EXPECT_THROW(ef_doubling(planar_lines(3), Angle(1.2)), Error);
}

TEST(EfDoubling, ScaleExhausted) {
  try {
    ef_doubling(planar_lines(3), Angle(1.0), 1e-6, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ScaleExhausted);
  }
}

TEST(Witness, ObtuseTripleFromCovering) {
  const LineArrangement lines = planar_lines(2);
  const double rho = pi / 2 + 0.01;
  std::vector<Point> pts{Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0.1), Eigen::Vector2d(2.2, 1.9),
                         Eigen::Vector2d(-1, 3), Eigen::Vector2d(0.4, -2)};
  const ObtuseWitness w = obtuse_triple_witness(PointSet(2, pts), lines, Angle(rho));
  EXPECT_GE(oracle::triple_angle(w.vi, w.v, w.vj), pi - rho - 1e-9);
  EXPECT_THROW(obtuse_triple_witness(PointSet(2, {pts.begin(), pts.begin() + 4}), lines, Angle(rho)),
               Error);
}

TEST(NBounds, FormulasAndOrdering) {
  const NBoundsReport r = n_bounds(Angle(2.0), 2, 1.0, 4.0);
  const double rho = pi - 2.0;
  EXPECT_NEAR(r.lower, std::pow(2.0, 1.0 / rho - 1), 1e-9 * r.lower);
  EXPECT_NEAR(r.upper, 1 + std::pow(2.0, 4.0 / rho + 1), 1e-9 * r.upper);
  EXPECT_TRUE(r.ordered);
  const NBoundsReport big = n_bounds(Angle(3.1), 6, 1.0, 4.0);
  EXPECT_TRUE(big.lower_overflow);
  EXPECT_TRUE(big.upper_overflow);
  EXPECT_TRUE(big.ordered);
  EXPECT_THROW(n_bounds(Angle(1.0), 2, 1.0, 4.0), Error);
}
