#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "anglebound/geometry.hpp"

namespace anglebound {

/// Acute angle between the undirected lines spanned by u and v.
Angle line_angle(const UnitVector& u, const UnitVector& v);

/// Flips v so its first coordinate with |x| > 1e-12 is positive.
UnitVector canonical_orientation(const UnitVector& v);

/// Undirected lines through the origin. Directions are stored in canonical
/// orientation; min_pairwise_angle is pi/2 for a single line.
class LineArrangement {
 public:
  LineArrangement(int dim, std::vector<UnitVector> lines);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return lines_.size(); }
  const std::vector<UnitVector>& lines() const noexcept { return lines_; }
  const UnitVector& operator[](std::size_t i) const { return lines_[i]; }
  Angle min_pairwise_angle() const noexcept { return min_angle_; }

  /// Index of the first line within `radius` (+1e-12) of direction d, or size().
  std::size_t first_line_within(const Eigen::VectorXd& d, double radius) const;

 private:
  int dim_;
  std::vector<UnitVector> lines_;
  Angle min_angle_;
};

struct PackOptions {
  int restarts = 8;
  unsigned threads = 1;
};

/// Spreads m lines in R^D by projected descent on a soft-max of |u_i . u_j|
/// with sharpening temperature, keeping the best exact minimum angle seen over
/// all restarts (lowest restart index wins ties).
LineArrangement pack_lines(int m, int dim, int iters, std::uint64_t seed,
                           const PackOptions& options = {});

struct CoverOptions {
  std::size_t probes = 100000;
  std::size_t max_lines = 20000;
  int candidates = 32;
};

struct CoverReport {
  LineArrangement arrangement;
  Angle rho;
  std::size_t probe_count = 0;
  /// Largest angle from a probe line to its nearest chosen line; <= rho/2.
  double max_probe_angle = 0.0;
  /// Typical probe spacing (radians): (area of the projective sphere / probes)^(1/(D-1)).
  double probe_spacing = 0.0;
};

/// Lines such that every probe line lies within rho/2 of one of them. In the
/// plane the ceil(pi/rho) equally spaced lines are returned; in higher
/// dimension lines are added greedily, each covering the most uncovered probes.
CoverReport cover_lines(Angle rho, int dim, std::uint64_t seed, const CoverOptions& options = {});

/// Quasi-random probe directions (canonical orientation) used by cover_lines.
std::vector<Eigen::VectorXd> probe_lines(int dim, std::size_t count, std::uint64_t seed);

/// c with (c / rho)^{d-1} just below the line count at the achieved separation.
double packing_constant(const LineArrangement& packing);
/// C with (C / rho)^{d-1} just above the line count of a rho/2 covering.
double covering_constant(const LineArrangement& covering, Angle rho);

}  // namespace anglebound
