#pragma once

#include <span>

#include <Eigen/Dense>

namespace anglebound {

struct Ball {
  Eigen::VectorXd center;
  double radius = 0.0;
};

/// Smallest Euclidean ball containing `points`. Uses move-to-front Welzl
/// recursion up to dimension kWelzlMaxDim and the iterative solver beyond it
/// (or whenever the recursion's result fails its containment check).
Ball min_enclosing_ball(std::span<const Eigen::VectorXd> points);

inline constexpr int kWelzlMaxDim = 12;

Ball min_enclosing_ball_welzl(std::span<const Eigen::VectorXd> points);

/// Frank-Wolfe iteration with away steps on the dual; the radius returned is
/// the true covering radius of the final center, within a factor (1 + tol) of
/// optimal in squared radius.
Ball min_enclosing_ball_iterative(std::span<const Eigen::VectorXd> points, double tol = 1e-10);

}  // namespace anglebound
