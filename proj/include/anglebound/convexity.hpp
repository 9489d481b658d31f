#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "anglebound/geometry.hpp"

namespace anglebound {

/// Barycentric coordinates >= -kBarycentricTolerance count as nonnegative; the
/// strict tests demand > +kBarycentricTolerance.
inline constexpr double kBarycentricTolerance = 1e-10;

struct ConvexPositionVerdict {
  bool in_convex_position = true;
  std::optional<Point> witness_point;
  std::optional<std::size_t> witness_index;
  std::optional<std::vector<Point>> witness_simplex;
};

struct ObtuseWitness {
  Point vi;
  Point v;
  Point vj;
  Angle angle;
};

/// Smallest dot product over unordered pairs.
double min_pairwise_dot(std::span<const UnitVector> directions);

/// Barycentric coordinates of p in the simplex spanned by `vertices`, or nullopt
/// when p is off the affine hull. Throws DegenerateSimplex for affinely
/// dependent vertices.
std::optional<Eigen::VectorXd> barycentric_coordinates(const Point& p,
                                                       std::span<const Point> vertices);

bool simplex_contains_origin(std::span<const Point> vertices, bool strict);

/// Affinely independent subset (indices into `points`) whose hull contains p.
std::vector<std::size_t> caratheodory_indices(const Point& p, std::span<const Point> points);
std::vector<Point> caratheodory_decompose(const Point& p, const PointSet& points);

/// Finds the first point lying in the hull of the others, boundary included.
ConvexPositionVerdict is_convex_position(const PointSet& points);

/// Pair of simplex vertices subtending the largest angle at an interior point p.
ObtuseWitness obtuse_witness(const Point& p, std::span<const Point> simplex);

}  // namespace anglebound
