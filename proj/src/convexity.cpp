#include "anglebound/convexity.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "anglebound/errors.hpp"
#include "anglebound/linprog.hpp"

namespace anglebound {

double min_pairwise_dot(std::span<const UnitVector> directions) {
  if (directions.size() < 2) throw Error(ErrorCode::OutOfRange, "need at least two directions");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < directions.size(); ++i) {
    for (std::size_t j = i + 1; j < directions.size(); ++j) {
      best = std::min(best, directions[i].dot(directions[j]));
    }
  }
  return best;
}

std::optional<Eigen::VectorXd> barycentric_coordinates(const Point& p,
                                                       std::span<const Point> vertices) {
  if (vertices.empty()) throw Error(ErrorCode::DegenerateSimplex, "empty simplex");
  const Eigen::Index dim = p.size();
  const Eigen::Index k = static_cast<Eigen::Index>(vertices.size());
  if (k > dim + 1) {
    throw Error(ErrorCode::DegenerateSimplex, "more than D + 1 vertices cannot be independent");
  }
  const Point& origin = vertices.front();
  double scale = (p - origin).norm();
  for (const auto& v : vertices) scale = std::max(scale, (v - origin).norm());
  if (scale == 0.0) scale = 1.0;

  Eigen::MatrixXd M(dim + 1, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    M.col(j).head(dim) = (vertices[static_cast<std::size_t>(j)] - origin) / scale;
    M(dim, j) = 1.0;
  }
  Eigen::VectorXd rhs(dim + 1);
  rhs.head(dim) = (p - origin) / scale;
  rhs[dim] = 1.0;

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(M);
  qr.setThreshold(1e-10);
  if (qr.rank() < k) throw Error(ErrorCode::DegenerateSimplex, "vertices are affinely dependent");
  Eigen::VectorXd lambda = qr.solve(rhs);
  if ((M * lambda - rhs).norm() > 1e-9) return std::nullopt;
  return lambda;
}

bool simplex_contains_origin(std::span<const Point> vertices, bool strict) {
  if (vertices.empty()) throw Error(ErrorCode::DegenerateSimplex, "empty simplex");
  const auto lambda =
      barycentric_coordinates(Point::Zero(vertices.front().size()), vertices);
  if (!lambda) return false;
  return strict ? (lambda->array() > kBarycentricTolerance).all()
                : (lambda->array() >= -kBarycentricTolerance).all();
}

namespace {

std::vector<Point> gather(std::span<const Point> points, const std::vector<std::size_t>& idx) {
  std::vector<Point> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(points[i]);
  return out;
}

// Removes affine dependencies from a convex combination, keeping p in the hull.
void reduce_to_independent(std::span<const Point> points, std::vector<std::size_t>& support,
                           std::vector<double>& weights) {
  const Eigen::Index dim = points.front().size();
  while (support.size() > 1 && affine_rank(gather(points, support)) <
                                   static_cast<int>(support.size()) - 1) {
    const Eigen::Index k = static_cast<Eigen::Index>(support.size());
    const Point& base = points[support.front()];
    double scale = 0.0;
    for (auto i : support) scale = std::max(scale, (points[i] - base).norm());
    if (scale == 0.0) scale = 1.0;
    Eigen::MatrixXd M(dim + 1, k);
    for (Eigen::Index j = 0; j < k; ++j) {
      M.col(j).head(dim) = (points[support[static_cast<std::size_t>(j)]] - base) / scale;
      M(dim, j) = 1.0;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
    lu.setThreshold(1e-10);
    Eigen::MatrixXd kernel = lu.kernel();
    if (kernel.cols() == 0 || kernel.col(0).norm() == 0.0) break;
    Eigen::VectorXd mu = kernel.col(0);
    if (mu.maxCoeff() <= 0.0) mu = -mu;
    double step = std::numeric_limits<double>::infinity();
    std::size_t hit = 0;
    for (std::size_t j = 0; j < support.size(); ++j) {
      if (mu[static_cast<Eigen::Index>(j)] > 1e-14) {
        const double t = weights[j] / mu[static_cast<Eigen::Index>(j)];
        if (t < step) {
          step = t;
          hit = j;
        }
      }
    }
    for (std::size_t j = 0; j < support.size(); ++j) weights[j] -= step * mu[static_cast<Eigen::Index>(j)];
    weights[hit] = 0.0;
    std::vector<std::size_t> next_support;
    std::vector<double> next_weights;
    for (std::size_t j = 0; j < support.size(); ++j) {
      if (weights[j] > 1e-14) {
        next_support.push_back(support[j]);
        next_weights.push_back(weights[j]);
      }
    }
    support = std::move(next_support);
    weights = std::move(next_weights);
  }
}

}  // namespace

std::vector<std::size_t> caratheodory_indices(const Point& p, std::span<const Point> points) {
  const ConvexCombination comb = solve_convex_combination(p, points);
  if (!comb.feasible) throw Error(ErrorCode::NotInHull, "point is not in the convex hull");

  std::vector<std::size_t> support;
  std::vector<double> weights;
  for (std::size_t j = 0; j < points.size(); ++j) {
    const double w = comb.weights[static_cast<Eigen::Index>(j)];
    if (w > 1e-12) {
      support.push_back(j);
      weights.push_back(w);
    }
  }
  if (support.empty()) throw std::logic_error("feasible convex combination with empty support");
  reduce_to_independent(points, support, weights);

  // Drop vertices whose barycentric weight is within tolerance of zero so the
  // returned simplex holds p in its relative interior.
  while (support.size() > 1) {
    const auto lambda = barycentric_coordinates(p, gather(points, support));
    if (!lambda) break;
    Eigen::Index worst = 0;
    const double smallest = lambda->minCoeff(&worst);
    if (smallest > kBarycentricTolerance) break;
    support.erase(support.begin() + worst);
  }
  return support;
}

std::vector<Point> caratheodory_decompose(const Point& p, const PointSet& points) {
  return gather(points.points(), caratheodory_indices(p, points.points()));
}

ConvexPositionVerdict is_convex_position(const PointSet& points) {
  ConvexPositionVerdict verdict;
  const auto all = points.points();
  std::vector<Point> others;
  others.reserve(all.size());
  for (std::size_t i = 0; i < all.size() && all.size() > 1; ++i) {
    others.clear();
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (j != i) others.push_back(all[j]);
    }
    if (!solve_convex_combination(all[i], others).feasible) continue;
    verdict.in_convex_position = false;
    verdict.witness_point = all[i];
    verdict.witness_index = i;
    verdict.witness_simplex = gather(others, caratheodory_indices(all[i], others));
    return verdict;
  }
  return verdict;
}

ObtuseWitness obtuse_witness(const Point& p, std::span<const Point> simplex) {
  if (simplex.size() < 2) {
    throw Error(ErrorCode::DegenerateSimplex, "an interior point needs at least two vertices");
  }
  const auto lambda = barycentric_coordinates(p, simplex);
  if (!lambda || !(lambda->array() > kBarycentricTolerance).all()) {
    throw Error(ErrorCode::NotInterior, "point is not in the relative interior of the simplex");
  }
  const auto rays = rays_from(p, simplex);
  std::size_t bi = 0, bj = 1;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rays.size(); ++i) {
    for (std::size_t j = i + 1; j < rays.size(); ++j) {
      const double c = rays[i].dot(rays[j]);
      if (c < best) {
        best = c;
        bi = i;
        bj = j;
      }
    }
  }
  return {simplex[bi], p, simplex[bj], angle_at(simplex[bi], p, simplex[bj])};
}

}  // namespace anglebound
