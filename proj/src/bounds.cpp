#include "anglebound/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "anglebound/errors.hpp"

namespace anglebound {

namespace {

constexpr int kLogScaleAbove = 60;

void require_positive_dim(int d) {
  if (d < 1) throw Error(ErrorCode::OutOfRange, "dimension must be >= 1, got " + std::to_string(d));
}

}  // namespace

Angle theta_d(int d) {
  require_positive_dim(d);
  return Angle(std::acos(-1.0 / d));
}

double half_theta_d_sine(int d) {
  require_positive_dim(d);
  return std::sqrt((d + 1.0) / (2.0 * d));
}

Angle eta_of_theta(Angle theta, int d) {
  require_positive_dim(d);
  if (!(theta.radians() > 0.0)) throw Error(ErrorCode::OutOfRange, "theta must be positive");
  double ratio = std::sin(theta.radians() / 2.0) / half_theta_d_sine(d);
  // theta == theta_d can land one ulp above 1 after rounding.
  if (ratio > 1.0 && ratio <= 1.0 + 8 * std::numeric_limits<double>::epsilon()) ratio = 1.0;
  if (ratio > 1.0) {
    throw Error(ErrorCode::OutOfRange,
                "theta = " + std::to_string(theta.radians()) + " exceeds theta_" + std::to_string(d));
  }
  return Angle(std::asin(ratio));
}

QuadratureResult f_fraction(int d, Angle eta) {
  require_positive_dim(d);
  const double half_pi = std::numbers::pi / 2.0;
  if (eta.radians() > half_pi) throw Error(ErrorCode::OutOfRange, "eta must lie in [0, pi/2]");
  const double upper = half_pi - eta.radians();
  const double power = d - 1.0;

  if (d <= kLogScaleAbove) {
    auto integrand = [power](double t) { return std::pow(std::sin(t), power); };
    const QuadratureResult den = adaptive_simpson(integrand, 0.0, std::numbers::pi);
    QuadratureResult num;
    if (upper > 0.0) num = adaptive_simpson(integrand, 0.0, upper);
    QuadratureResult out;
    out.value = num.value / den.value;
    out.abs_error_estimate = (num.abs_error_estimate + out.value * den.abs_error_estimate) / den.value;
    out.panels = num.panels + den.panels;
    return out;
  }

  // sin^{d-1} peaks at 1 on [0, pi], so the denominator only needs the log-space
  // evaluation; the numerator is normalized by its value at the upper limit.
  auto den_integrand = [power](double t) {
    const double s = std::sin(t);
    return s > 0.0 ? std::exp(power * std::log(s)) : 0.0;
  };
  const QuadratureResult den = adaptive_simpson(den_integrand, 0.0, std::numbers::pi);
  QuadratureResult out;
  out.panels = den.panels;
  if (!(upper > 0.0)) return out;
  const double log_sin_upper = std::log(std::sin(upper));
  auto num_integrand = [power, log_sin_upper](double t) {
    const double s = std::sin(t);
    return s > 0.0 ? std::exp(power * (std::log(s) - log_sin_upper)) : 0.0;
  };
  const QuadratureResult num = adaptive_simpson(num_integrand, 0.0, upper);
  const double log_value = power * log_sin_upper + std::log(num.value) - std::log(den.value);
  out.value = std::exp(log_value);
  out.abs_error_estimate =
      out.value * (num.abs_error_estimate / num.value + den.abs_error_estimate / den.value);
  out.panels += num.panels;
  return out;
}

BoundReport cardinality_bound(Angle theta, int ambient_dim) {
  if (ambient_dim < 2) throw Error(ErrorCode::OutOfRange, "ambient dimension must be >= 2");
  BoundReport report;
  report.theta = theta;
  report.ambient_dim = ambient_dim;
  report.eta = eta_of_theta(theta, ambient_dim - 1);
  report.f_value = f_fraction(ambient_dim - 1, report.eta);
  report.bound = report.f_value.value > 0.0 ? 1.0 / report.f_value.value
                                            : std::numeric_limits<double>::infinity();
  // Angles within kBoundaryTolerance of theta_D (e.g. 120 degrees converted to
  // radians in the plane) count as the boundary, where the hypothesis fails.
  report.theorem_applicable = theta.radians() < theta_d(ambient_dim).radians() - kBoundaryTolerance;
  return report;
}

double asymptotic_envelope(int d) {
  if (d < 2) throw Error(ErrorCode::OutOfRange, "envelope needs d >= 2");
  const double log_value = std::log(2.0) + (2.0 * d - 1.0) * std::log(std::numbers::pi / 2.0) +
                           0.5 * d * std::log(static_cast<double>(d));
  if (log_value >= std::log(std::numeric_limits<double>::max())) {
    throw Error(ErrorCode::Overflow, "envelope exceeds double range at d = " + std::to_string(d));
  }
  return std::exp(log_value);
}

}  // namespace anglebound
