#pragma once

#include "anglebound/coloring.hpp"
#include "anglebound/convexity.hpp"
#include "anglebound/geometry.hpp"
#include "anglebound/lines.hpp"

namespace anglebound {

/// Doubling construction: start with {0, l_1}; at step k union the set with its
/// translate by factor * diameter * l_k. The factor starts at slack and doubles
/// until every step keeps the largest angle at most pi - rho. Returns 2^m points.
/// Throws ScaleExhausted when max_scale_doublings doublings do not suffice.
PointSet ef_doubling(const LineArrangement& lines, Angle rho, double slack = 1.0,
                     int max_scale_doublings = 60);

/// Colors every segment of `points` by the first line within rho/2 of it.
/// Throws ColoringFailed for a segment no line is close to.
EdgeColoring color_segments(const PointSet& points, const LineArrangement& lines, Angle rho);

/// Triple (x, y, z) with angle at y of at least pi - rho, taken from two
/// consecutive same-direction edges of a monochromatic odd cycle.
ObtuseWitness obtuse_triple_witness(const PointSet& points, const LineArrangement& lines,
                                    Angle rho);

struct NBoundsReport {
  Angle theta;
  int d = 0;
  double c_d = 0.0;
  double C_d = 0.0;
  double lower = 0.0;  // 2^{(c_d/(pi-theta))^{d-1} - 1}
  double upper = 0.0;  // 1 + 2^{(C_d/(pi-theta))^{d-1} + 1}
  double log2_lower = 0.0;
  double log2_upper_minus_one = 0.0;
  bool lower_overflow = false;
  bool upper_overflow = false;
  bool ordered = true;  // lower < upper
  /// (d-1) log2(c_d / (pi - theta)): sizes above this are where the lower bound is asserted.
  double lower_bound_size_threshold = 0.0;
};

NBoundsReport n_bounds(Angle theta, int d, double c_d, double C_d);

}  // namespace anglebound
