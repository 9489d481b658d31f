#include "anglebound/curvature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <string>

#include "anglebound/bounds.hpp"
#include "anglebound/convexity.hpp"
#include "anglebound/errors.hpp"
#include "anglebound/miniball.hpp"
#include "anglebound/random.hpp"

namespace anglebound {

Cone::Cone(Point apex, UnitVector axis, Angle half_angle)
    : apex_(std::move(apex)), axis_(std::move(axis)), half_angle_(half_angle) {
  if (!(half_angle.radians() > 0.0 && half_angle.radians() < std::numbers::pi / 2)) {
    throw Error(ErrorCode::OutOfRange, "cone half-angle must lie in (0, pi/2)");
  }
  if (axis_.dim() != apex_.size()) throw Error(ErrorCode::InvalidInput, "cone axis dimension");
}

bool Cone::contains(const Point& p, double tol) const {
  const Eigen::VectorXd d = p - apex_;
  if (d.norm() <= kDistinctTolerance) return true;
  return angle_between(d, axis_.coords()).radians() <= half_angle_.radians() + tol;
}

namespace {

void require_convex_position(const PointSet& vertices) {
  if (!is_convex_position(vertices).in_convex_position) {
    throw Error(ErrorCode::NotConvexPosition, "points are not in convex position");
  }
}

void require_samples(std::int64_t samples) {
  if (samples < kMinCurvatureSamples) {
    throw Error(ErrorCode::OutOfRange,
                "need at least " + std::to_string(kMinCurvatureSamples) + " samples");
  }
}

}  // namespace

FractionEstimate normal_cone_fraction_mc(const PointSet& vertices, std::size_t index,
                                         std::int64_t samples, std::uint64_t seed,
                                         unsigned threads) {
  require_samples(samples);
  if (index >= vertices.size()) throw Error(ErrorCode::OutOfRange, "vertex index out of range");
  require_convex_position(vertices);

  const int dim = vertices.dim();
  Eigen::MatrixXd edges(dim, static_cast<Eigen::Index>(vertices.size()) - 1);
  for (std::size_t j = 0, col = 0; j < vertices.size(); ++j) {
    if (j != index) edges.col(static_cast<Eigen::Index>(col++)) = vertices[j] - vertices[index];
  }
  const CounterRng rng(seed);
  std::atomic<std::int64_t> hits{0};
  parallel_chunks(static_cast<std::size_t>(samples), threads,
                  [&](std::size_t begin, std::size_t end, unsigned) {
                    std::int64_t local = 0;
                    for (std::size_t s = begin; s < end; ++s) {
                      const Eigen::VectorXd u = rng.direction(s, dim);
                      if (edges.cols() == 0 || (edges.transpose() * u).maxCoeff() <= 0.0) ++local;
                    }
                    hits += local;
                  });
  const double f = static_cast<double>(hits.load()) / static_cast<double>(samples);
  return {f, std::sqrt(f * (1.0 - f) / static_cast<double>(samples))};
}

CurvatureEstimate gauss_bonnet_sum(const PointSet& vertices, std::int64_t samples,
                                   std::uint64_t seed, unsigned threads) {
  require_samples(samples);
  require_convex_position(vertices);
  if (affine_rank(vertices.points()) != vertices.dim()) {
    throw Error(ErrorCode::DegenerateHull, "hull is not full-dimensional");
  }
  const int dim = vertices.dim();
  const std::size_t n = vertices.size();
  Eigen::MatrixXd V(static_cast<Eigen::Index>(n), dim);
  for (std::size_t i = 0; i < n; ++i) V.row(static_cast<Eigen::Index>(i)) = vertices[i].transpose();

  const CounterRng rng(seed);
  const unsigned workers = std::max(1u, threads);
  std::vector<std::vector<std::int64_t>> partial(workers, std::vector<std::int64_t>(n, 0));
  parallel_chunks(static_cast<std::size_t>(samples), workers,
                  [&](std::size_t begin, std::size_t end, unsigned w) {
                    auto& counts = partial[w];
                    for (std::size_t s = begin; s < end; ++s) {
                      const Eigen::VectorXd proj = V * rng.direction(s, dim);
                      Eigen::Index best = 0;
                      for (Eigen::Index i = 1; i < proj.size(); ++i) {
                        if (proj[i] > proj[best]) best = i;
                      }
                      ++counts[static_cast<std::size_t>(best)];
                    }
                  });

  CurvatureEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.counts.assign(n, 0);
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < n; ++i) est.counts[i] += p[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double f = static_cast<double>(est.counts[i]) / static_cast<double>(samples);
    est.fractions.push_back(f);
    est.std_error.push_back(std::sqrt(f * (1.0 - f) / static_cast<double>(samples)));
  }
  return est;
}

Angle dekster_radius(Angle diameter, int d) {
  if (diameter.radians() == 0.0) {
    if (d < 1) throw Error(ErrorCode::OutOfRange, "dimension must be >= 1");
    return Angle(0.0);
  }
  return eta_of_theta(diameter, d);
}

SphericalCap min_enclosing_cap(std::span<const UnitVector> directions) {
  if (directions.empty()) throw Error(ErrorCode::InvalidInput, "enclosing cap of no directions");
  std::vector<Eigen::VectorXd> pts;
  pts.reserve(directions.size());
  for (const auto& h : directions) {
    if (h.dim() != directions.front().dim()) {
      throw Error(ErrorCode::InvalidInput, "directions of mixed dimension");
    }
    pts.push_back(h.coords());
  }
  const Ball ball = min_enclosing_ball(pts);
  const double c_norm = ball.center.norm();
  if (c_norm <= 1e-9) {
    throw Error(ErrorCode::NotHemispherical, "directions are not inside an open hemisphere");
  }
  const UnitVector center(ball.center / c_norm);
  const double cos_r = std::clamp(
      (1.0 + c_norm * c_norm - ball.radius * ball.radius) / (2.0 * c_norm), -1.0, 1.0);
  double radius = std::acos(cos_r);
  // Rounding in the closed form must not leave a direction outside the cap.
  for (const auto& h : directions) {
    radius = std::max(radius, std::acos(std::clamp(h.dot(center), -1.0, 1.0)));
  }
  return {center, Angle(radius)};
}

std::vector<Cone> cone_cover_certificate(const PointSet& vertices, Angle eta) {
  if (!(eta.radians() > 0.0 && eta.radians() < std::numbers::pi / 2)) {
    throw Error(ErrorCode::OutOfRange, "eta must lie in (0, pi/2)");
  }
  require_convex_position(vertices);
  const int dim = vertices.dim();
  std::vector<Cone> cones;
  cones.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    std::vector<Point> others;
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (j != i) others.push_back(vertices[j]);
    }
    if (others.empty()) {
      Eigen::VectorXd axis = Eigen::VectorXd::Zero(dim);
      axis[0] = 1.0;
      cones.emplace_back(vertices[i], UnitVector(axis), eta);
      continue;
    }
    const auto rays = rays_from(vertices[i], others);
    SphericalCap cap{rays.front(), Angle(0.0)};
    try {
      cap = min_enclosing_cap(rays);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotHemispherical) throw;
      throw CapTooSmallError(i, std::numbers::pi / 2, eta.radians());
    }
    if (cap.radius.radians() > eta.radians() + 1e-12) {
      throw CapTooSmallError(i, cap.radius.radians(), eta.radians());
    }
    cones.emplace_back(vertices[i], cap.center, eta);
  }
  for (const auto& cone : cones) {
    for (const auto& v : vertices) {
      if (!cone.contains(v)) throw std::logic_error("cone certificate failed membership check");
    }
  }
  return cones;
}

}  // namespace anglebound
