#pragma once

#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace anglebound {

using Point = Eigen::VectorXd;

/// Points closer than this (Euclidean) are treated as coincident.
inline constexpr double kDistinctTolerance = 1e-9;

/// Angle in radians, always inside [0, pi].
class Angle {
 public:
  constexpr Angle() = default;
  explicit Angle(double radians);

  static Angle from_degrees(double degrees);

  double radians() const noexcept { return radians_; }
  double degrees() const noexcept { return radians_ * 180.0 / std::numbers::pi; }

  friend bool operator==(Angle, Angle) = default;
  friend auto operator<=>(Angle a, Angle b) { return a.radians_ <=> b.radians_; }

 private:
  double radians_ = 0.0;
};

/// Vector of Euclidean norm one (within 1e-12).
class UnitVector {
 public:
  explicit UnitVector(Eigen::VectorXd coords);

  /// Scales a nonzero vector onto the unit sphere.
  static UnitVector normalized(const Eigen::VectorXd& v);

  const Eigen::VectorXd& coords() const noexcept { return coords_; }
  Eigen::Index dim() const noexcept { return coords_.size(); }
  double dot(const UnitVector& other) const { return coords_.dot(other.coords_); }
  double operator[](Eigen::Index i) const { return coords_[i]; }

 private:
  Eigen::VectorXd coords_;
};

/// Finite list of pairwise distinct points sharing one dimension.
class PointSet {
 public:
  PointSet(int dim, std::vector<Point> points);

  /// Dimension is taken from the first point; an empty set needs an explicit dim.
  static PointSet from_points(std::vector<Point> points);
  static PointSet from_rows(const std::vector<std::vector<double>>& rows);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  std::span<const Point> points() const noexcept { return points_; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  /// Copy with one extra point appended; revalidates distinctness.
  PointSet with_point(const Point& p) const;
  PointSet without_point(std::size_t index) const;

 private:
  int dim_;
  std::vector<Point> points_;
};

/// Angle between two nonzero vectors, computed from the clamped normalized dot.
Angle angle_between(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

/// Angle at vertex y in the triple (x, y, z).
Angle angle_at(const Point& x, const Point& y, const Point& z);

/// Largest angle over all triples with any vertex; 0 when fewer than 3 points.
Angle max_angle(const PointSet& points);
Angle max_angle(std::span<const Point> points);

/// Largest pairwise great-circle distance; 0 for a singleton.
Angle geodesic_diameter(std::span<const UnitVector> directions);

/// Unit directions from apex to each point, order preserved.
std::vector<UnitVector> rays_from(const Point& apex, const PointSet& points);
std::vector<UnitVector> rays_from(const Point& apex, std::span<const Point> points);

/// Smallest pairwise Euclidean distance; +inf for fewer than two points.
double min_pairwise_distance(std::span<const Point> points);

/// Dimension of the affine hull, using a relative rank threshold.
int affine_rank(std::span<const Point> points);

}  // namespace anglebound
