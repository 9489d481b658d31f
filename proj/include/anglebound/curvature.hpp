#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "anglebound/geometry.hpp"

namespace anglebound {

/// apex + {x : axis . x >= |x| cos(half_angle)} with half_angle in (0, pi/2).
class Cone {
 public:
  Cone(Point apex, UnitVector axis, Angle half_angle);

  const Point& apex() const noexcept { return apex_; }
  const UnitVector& axis() const noexcept { return axis_; }
  Angle half_angle() const noexcept { return half_angle_; }

  /// True for the apex itself and for points whose ray makes an angle at most
  /// half_angle + tol with the axis.
  bool contains(const Point& p, double tol = 1e-9) const;

 private:
  Point apex_;
  UnitVector axis_;
  Angle half_angle_;
};

struct SphericalCap {
  UnitVector center;
  Angle radius;

  bool contains(const UnitVector& h, double tol = 1e-9) const {
    return h.dot(center) >= std::cos(radius.radians()) - tol;
  }
};

struct FractionEstimate {
  double fraction = 0.0;
  double std_error = 0.0;
};

struct CurvatureEstimate {
  std::vector<double> fractions;
  std::vector<std::int64_t> counts;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<double> std_error;
};

inline constexpr std::int64_t kMinCurvatureSamples = 1000;

/// Monte Carlo share of unit directions u with u . (v_j - v_i) <= 0 for all j,
/// i.e. the normal cone of conv(V) at v_i as a fraction of the sphere.
FractionEstimate normal_cone_fraction_mc(const PointSet& vertices, std::size_t index,
                                         std::int64_t samples, std::uint64_t seed,
                                         unsigned threads = 1);

/// Normal-cone fractions of every vertex from one shared sample: each direction
/// goes to the vertex maximizing u . v (lowest index on ties), so the counts sum
/// to `samples`.
CurvatureEstimate gauss_bonnet_sum(const PointSet& vertices, std::int64_t samples,
                                   std::uint64_t seed, unsigned threads = 1);

/// Smallest R with diam <= 2 arcsin(sin(theta_d / 2) sin R).
Angle dekster_radius(Angle diameter, int d);

/// Smallest cap holding every direction, read off the minimal enclosing
/// Euclidean ball (center c, radius r): cos R = (1 + |c|^2 - r^2) / (2|c|).
SphericalCap min_enclosing_cap(std::span<const UnitVector> directions);

/// One cone per vertex with apex v_i, axis the enclosing-cap center of the
/// rays from v_i, and half-angle eta; every vertex is checked against every cone.
std::vector<Cone> cone_cover_certificate(const PointSet& vertices, Angle eta);

}  // namespace anglebound
