#include "anglebound/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "anglebound/errors.hpp"

namespace anglebound {

Angle::Angle(double radians) : radians_(radians) {
  if (!(radians >= 0.0 && radians <= std::numbers::pi)) {
    throw Error(ErrorCode::OutOfRange, "angle " + std::to_string(radians) + " outside [0, pi]");
  }
}

Angle Angle::from_degrees(double degrees) { return Angle(degrees * std::numbers::pi / 180.0); }

UnitVector::UnitVector(Eigen::VectorXd coords) : coords_(std::move(coords)) {
  if (coords_.size() < 1 || !coords_.allFinite() || std::abs(coords_.norm() - 1.0) > 1e-12) {
    throw Error(ErrorCode::InvalidInput, "vector is not of unit length");
  }
}

UnitVector UnitVector::normalized(const Eigen::VectorXd& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::InvalidInput, "cannot normalize a zero or non-finite vector");
  }
  return UnitVector(v / n);
}

PointSet::PointSet(int dim, std::vector<Point> points) : dim_(dim), points_(std::move(points)) {
  if (dim_ < 1) throw Error(ErrorCode::InvalidInput, "point set dimension must be >= 1");
  for (const auto& p : points_) {
    if (p.size() != dim_) throw Error(ErrorCode::InvalidInput, "point dimension mismatch");
    if (!p.allFinite()) throw Error(ErrorCode::InvalidInput, "non-finite coordinate");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if ((points_[i] - points_[j]).norm() <= kDistinctTolerance) {
        throw Error(ErrorCode::InvalidInput,
                    "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      }
    }
  }
}

PointSet PointSet::from_points(std::vector<Point> points) {
  if (points.empty()) throw Error(ErrorCode::InvalidInput, "empty point list has no dimension");
  const int dim = static_cast<int>(points.front().size());
  return PointSet(dim, std::move(points));
}

PointSet PointSet::from_rows(const std::vector<std::vector<double>>& rows) {
  std::vector<Point> points;
  points.reserve(rows.size());
  for (const auto& r : rows) {
    points.push_back(Eigen::Map<const Eigen::VectorXd>(r.data(), static_cast<Eigen::Index>(r.size())));
  }
  return from_points(std::move(points));
}

PointSet PointSet::with_point(const Point& p) const {
  auto pts = points_;
  pts.push_back(p);
  return PointSet(dim_, std::move(pts));
}

PointSet PointSet::without_point(std::size_t index) const {
  auto pts = points_;
  pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(index));
  return PointSet(dim_, std::move(pts));
}

namespace {

double clamped_cosine(const Eigen::VectorXd& a, double norm_a, const Eigen::VectorXd& b,
                      double norm_b) {
  return std::clamp(a.dot(b) / (norm_a * norm_b), -1.0, 1.0);
}

}  // namespace

Angle angle_between(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (!(na > 0.0) || !(nb > 0.0)) throw Error(ErrorCode::DegenerateTriple, "zero-length ray");
  return Angle(std::acos(clamped_cosine(a, na, b, nb)));
}

Angle angle_at(const Point& x, const Point& y, const Point& z) {
  const Eigen::VectorXd a = x - y;
  const Eigen::VectorXd b = z - y;
  const double na = a.norm();
  const double nb = b.norm();
  if (na <= kDistinctTolerance || nb <= kDistinctTolerance) {
    throw Error(ErrorCode::DegenerateTriple, "vertex coincides with an endpoint");
  }
  return Angle(std::acos(clamped_cosine(a, na, b, nb)));
}

Angle max_angle(const PointSet& points) { return max_angle(points.points()); }

Angle max_angle(std::span<const Point> points) {
  const std::size_t n = points.size();
  if (n < 3) return Angle(0.0);
  // The largest angle at a vertex belongs to the pair with the smallest cosine,
  // and arccos is decreasing, so only the minimal cosine needs the arccos.
  double min_cos = 1.0;
  std::vector<Eigen::VectorXd> diffs(n);
  std::vector<double> norms(n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      if (x == y) continue;
      diffs[x] = points[x] - points[y];
      norms[x] = diffs[x].norm();
      if (norms[x] <= kDistinctTolerance) {
        throw Error(ErrorCode::DegenerateTriple, "coincident points in max_angle");
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (x == y) continue;
      for (std::size_t z = x + 1; z < n; ++z) {
        if (z == y) continue;
        min_cos = std::min(min_cos, clamped_cosine(diffs[x], norms[x], diffs[z], norms[z]));
      }
    }
  }
  return Angle(std::acos(min_cos));
}

Angle geodesic_diameter(std::span<const UnitVector> directions) {
  double min_cos = 1.0;
  for (std::size_t i = 0; i < directions.size(); ++i) {
    for (std::size_t j = i + 1; j < directions.size(); ++j) {
      min_cos = std::min(min_cos, std::clamp(directions[i].dot(directions[j]), -1.0, 1.0));
    }
  }
  return Angle(std::acos(min_cos));
}

std::vector<UnitVector> rays_from(const Point& apex, const PointSet& points) {
  return rays_from(apex, points.points());
}

std::vector<UnitVector> rays_from(const Point& apex, std::span<const Point> points) {
  std::vector<UnitVector> rays;
  rays.reserve(points.size());
  for (const auto& p : points) {
    const Eigen::VectorXd d = p - apex;
    if (d.norm() <= kDistinctTolerance) {
      throw Error(ErrorCode::DegenerateTriple, "apex coincides with a point");
    }
    rays.push_back(UnitVector::normalized(d));
  }
  return rays;
}

double min_pairwise_distance(std::span<const Point> points) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      best = std::min(best, (points[i] - points[j]).norm());
    }
  }
  return best;
}

int affine_rank(std::span<const Point> points) {
  if (points.size() < 2) return 0;
  const auto dim = points.front().size();
  Eigen::MatrixXd diffs(dim, static_cast<Eigen::Index>(points.size() - 1));
  double scale = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    diffs.col(static_cast<Eigen::Index>(i - 1)) = points[i] - points[0];
    scale = std::max(scale, diffs.col(static_cast<Eigen::Index>(i - 1)).norm());
  }
  if (scale == 0.0) return 0;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(diffs / scale);
  qr.setThreshold(1e-10);
  return static_cast<int>(qr.rank());
}

}  // namespace anglebound
