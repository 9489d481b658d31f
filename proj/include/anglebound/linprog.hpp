#pragma once

#include <span>

#include <Eigen/Dense>

#include "anglebound/geometry.hpp"

namespace anglebound {

struct ConvexCombination {
  bool feasible = false;
  Eigen::VectorXd weights;  // one per input point; meaningful when feasible
  double infeasibility = 0.0;  // phase-one objective at termination
};

/// Decides p in conv(points) with a dense phase-one simplex method:
///   find w >= 0, sum w = 1, sum w_j (s_j - p) = 0.
/// Coordinates are translated to p and scaled by the largest |s_j - p| first;
/// the problem is declared feasible when the residual artificial mass is below
/// `tolerance`. The returned weights form a basic solution, so at most D + 1
/// of them are nonzero.
ConvexCombination solve_convex_combination(const Point& p, std::span<const Point> points,
                                           double tolerance = 1e-10);

}  // namespace anglebound
