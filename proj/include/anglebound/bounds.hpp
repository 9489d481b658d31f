#pragma once

#include "anglebound/geometry.hpp"
#include "anglebound/quadrature.hpp"

namespace anglebound {

/// arccos(-1/d): the obtuse threshold below which sets in R^d are in convex position.
Angle theta_d(int d);

/// sin(theta_d / 2) in the closed form sqrt((d + 1) / (2d)).
double half_theta_d_sine(int d);

/// Cone half-angle arcsin(sin(theta/2) / sin(theta_d/2)) that contains the rays
/// leaving any vertex of a set on the sphere S^d whose diameter is theta.
Angle eta_of_theta(Angle theta, int d);

/// Fraction of S^d occupied by the normals of a cone of half-angle eta:
///   int_0^{pi/2 - eta} sin^{d-1} t dt / int_0^pi sin^{d-1} t dt.
/// For d > 60 the integrands are rescaled in log space to avoid underflow.
QuadratureResult f_fraction(int d, Angle eta);

/// Distance from theta_D below which an angle is treated as lying on it.
inline constexpr double kBoundaryTolerance = 1e-12;

struct BoundReport {
  Angle theta;
  int ambient_dim = 0;
  Angle eta;
  QuadratureResult f_value;
  double bound = 0.0;  // +inf when f_value.value == 0
  bool theorem_applicable = false;
};

/// Upper bound 1 / f_{D-1}(eta_{D-1}(theta)) on the size of a set in R^D whose
/// largest angle is at most theta. The formula is evaluated for every theta up to
/// theta_{D-1}; theorem_applicable records whether theta < theta_D - kBoundaryTolerance.
BoundReport cardinality_bound(Angle theta, int ambient_dim);

/// 2 (pi/2)^{2d-1} d^{d/2}, the large-d envelope of 1 / f_d(eta_d(pi/2)).
double asymptotic_envelope(int d);

}  // namespace anglebound
