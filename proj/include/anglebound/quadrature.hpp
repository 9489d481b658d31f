#pragma once

#include <cstdint>
#include <functional>

namespace anglebound {

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::int64_t panels = 0;
};

struct SimpsonOptions {
  double abs_tolerance = 1e-13;  // per accepted panel
  std::int64_t max_panels = std::int64_t{1} << 20;
  int initial_panels = 16;
};

/// Adaptive Simpson rule with Richardson correction. A panel is accepted when
/// |S(left) + S(right) - S(whole)| / 15 <= abs_tolerance; once max_panels is
/// reached the remaining panels are accepted as they are and their error
/// estimates still enter abs_error_estimate.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  const SimpsonOptions& options = {});

}  // namespace anglebound
