#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "anglebound/geometry.hpp"

namespace anglebound {

/// Empirical configuration; achieved_angle is max_angle(points) recomputed on return.
struct SearchResult {
  PointSet points;
  Angle achieved_angle;
  std::int64_t iterations = 0;
  std::uint64_t seed = 0;
  int restarts = 0;
};

struct AnnealOptions {
  double initial_temperature = 0.05;  // radians of max angle
  double cooling = 0.995;             // per step
  double min_temperature = 1e-9;
  double initial_step = 0.15;         // coordinate scale after normalizing to unit RMS radius
  int proposals = 4;                  // candidates scored by the smoothed objective per step
  double sharpness_start = 20.0;      // log-sum-exp sharpness, grows geometrically
  double sharpness_end = 2000.0;
  unsigned threads = 1;
};

/// Log-sum-exp smoothing of all triple angles; tends to max_angle as sharpness grows.
double soft_max_angle(std::span<const Point> points, double sharpness);

/// Structured starting sets with n points in R^D: regular simplex, hypercube and
/// cross-polytope vertices, and a regular n-gon, whichever fit.
std::vector<std::vector<Point>> warm_starts(int n, int dim);

/// Simulated annealing on n points in R^D minimizing the largest angle. Runs the
/// applicable warm starts plus `restarts` Gaussian clouds, `iters` steps each;
/// the best result wins, lowest run index on ties.
SearchResult minimize_max_angle(int n, int dim, int iters, int restarts, std::uint64_t seed,
                                const AnnealOptions& options = {});

/// Grows a set keeping max_angle <= theta: random insertions, falling back to
/// annealing the enlarged set when insertions stall. `budget` bounds the number
/// of max_angle evaluations.
SearchResult max_cardinality_search(Angle theta, int dim, std::int64_t budget, std::uint64_t seed);

}  // namespace anglebound
