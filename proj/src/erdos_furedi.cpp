#include "anglebound/erdos_furedi.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "anglebound/errors.hpp"

namespace anglebound {

namespace {

double diameter(const std::vector<Point>& pts) {
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, (pts[i] - pts[j]).norm());
  }
  return d;
}

}  // namespace

PointSet ef_doubling(const LineArrangement& lines, Angle rho, double slack,
                     int max_scale_doublings) {
  if (!(rho.radians() > 0.0) || !(rho < lines.min_pairwise_angle())) {
    throw Error(ErrorCode::OutOfRange, "rho must be positive and below the line separation");
  }
  if (!(slack > 0.0)) throw Error(ErrorCode::OutOfRange, "slack must be positive");
  const double limit = std::numbers::pi - rho.radians();
  // Every step translates by factor * diameter. A factor that certifies one step
  // can leave segments too far from their lines for later steps, so a failure
  // anywhere restarts the whole construction with the factor doubled.
  double factor = slack;
  for (int attempt = 0; attempt <= max_scale_doublings; ++attempt, factor *= 2.0) {
    std::vector<Point> pts{Point::Zero(lines.dim()), lines[0].coords()};
    bool ok = true;
    for (std::size_t k = 1; k < lines.size() && ok; ++k) {
      const double t = factor * diameter(pts);
      std::vector<Point> next = pts;
      for (const auto& p : pts) next.push_back(p + t * lines[k].coords());
      // A translate can land on an existing point; that factor is rejected.
      ok = min_pairwise_distance(next) > kDistinctTolerance && max_angle(next).radians() <= limit;
      pts = std::move(next);
    }
    if (ok) return PointSet(lines.dim(), std::move(pts));
  }
  throw Error(ErrorCode::ScaleExhausted, "no translation factor up to slack * 2^" +
                                             std::to_string(max_scale_doublings) +
                                             " certified the construction");
}

EdgeColoring color_segments(const PointSet& points, const LineArrangement& lines, Angle rho) {
  if (points.dim() != lines.dim()) throw Error(ErrorCode::InvalidInput, "dimension mismatch");
  EdgeColoring coloring(points.size(), static_cast<int>(lines.size()));
  const double radius = rho.radians() / 2.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const std::size_t k = lines.first_line_within(points[j] - points[i], radius);
      if (k == lines.size()) {
        throw Error(ErrorCode::ColoringFailed, "segment " + std::to_string(i) + "-" +
                                                   std::to_string(j) + " is not near any line");
      }
      coloring.set(i, j, static_cast<int>(k));
    }
  }
  return coloring;
}

ObtuseWitness obtuse_triple_witness(const PointSet& points, const LineArrangement& lines,
                                    Angle rho) {
  if (!(rho.radians() > 0.0 && rho.radians() < std::numbers::pi)) {
    throw Error(ErrorCode::OutOfRange, "rho must lie in (0, pi)");
  }
  const std::size_t m = lines.size();
  if (m >= 62 || points.size() < (std::size_t{1} << m) + 1) {
    throw Error(ErrorCode::HypothesisViolated, "need at least 2^m + 1 points");
  }
  const EdgeColoring coloring = color_segments(points, lines, rho);
  const MonochromaticCycle cycle = find_mono_odd_cycle(coloring);
  const Eigen::VectorXd& axis = lines[static_cast<std::size_t>(cycle.color)].coords();
  const auto& v = cycle.vertices;
  const std::size_t len = v.size();
  auto sign = [&](std::size_t k) {
    return (points[v[(k + 1) % len]] - points[v[k]]).dot(axis) >= 0.0;
  };
  // An odd cyclic sign sequence cannot alternate everywhere.
  for (std::size_t k = 0; k < len; ++k) {
    const std::size_t prev = (k + len - 1) % len;
    if (sign(prev) == sign(k)) {
      const Point& x = points[v[prev]];
      const Point& y = points[v[k]];
      const Point& z = points[v[(k + 1) % len]];
      return {x, y, z, angle_at(x, y, z)};
    }
  }
  throw std::logic_error("odd cycle with alternating edge directions");
}

NBoundsReport n_bounds(Angle theta, int d, double c_d, double C_d) {
  const double pi = std::numbers::pi;
  if (!(theta.radians() > pi / 2 && theta.radians() < pi)) {
    throw Error(ErrorCode::OutOfRange, "theta must lie in (pi/2, pi)");
  }
  if (d < 2) throw Error(ErrorCode::OutOfRange, "n_bounds needs d >= 2");
  if (!(c_d > 0.0) || !(C_d > 0.0)) throw Error(ErrorCode::OutOfRange, "constants must be positive");
  const double gap = pi - theta.radians();
  NBoundsReport r;
  r.theta = theta;
  r.d = d;
  r.c_d = c_d;
  r.C_d = C_d;
  r.log2_lower = std::pow(c_d / gap, d - 1) - 1.0;
  r.log2_upper_minus_one = std::pow(C_d / gap, d - 1) + 1.0;
  r.lower = std::exp2(r.log2_lower);
  r.upper = 1.0 + std::exp2(r.log2_upper_minus_one);
  r.lower_overflow = !std::isfinite(r.lower);
  r.upper_overflow = !std::isfinite(r.upper);
  // Compare in log space so the ordering survives overflow.
  r.ordered = (r.lower_overflow || r.upper_overflow) ? r.log2_lower <= r.log2_upper_minus_one
                                                     : r.lower < r.upper;
  r.lower_bound_size_threshold = (d - 1) * std::log2(c_d / gap);
  return r;
}

}  // namespace anglebound
