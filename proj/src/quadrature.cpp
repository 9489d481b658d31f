#include "anglebound/quadrature.hpp"

#include <cmath>
#include <vector>

#include "anglebound/errors.hpp"

namespace anglebound {

namespace {

struct Panel {
  double a, b;
  double fa, fm, fb;
  double whole;
};

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  const SimpsonOptions& options) {
  QuadratureResult result;
  if (a == b) return result;
  if (!(b > a)) throw Error(ErrorCode::OutOfRange, "quadrature interval must satisfy a <= b");

  // Depth-first, left to right, so the summation order is deterministic.
  std::vector<Panel> stack;
  const int n0 = std::max(1, options.initial_panels);
  const double h0 = (b - a) / n0;
  std::vector<double> nodes(static_cast<std::size_t>(n0) + 1);
  std::vector<double> values(nodes.size());
  for (int i = 0; i <= n0; ++i) {
    nodes[i] = (i == n0) ? b : a + h0 * i;
    values[i] = f(nodes[i]);
  }
  for (int i = n0 - 1; i >= 0; --i) {
    const double m = 0.5 * (nodes[i] + nodes[i + 1]);
    const double fm = f(m);
    stack.push_back({nodes[i], nodes[i + 1], values[i], fm, values[i + 1],
                     simpson(nodes[i], nodes[i + 1], values[i], fm, values[i + 1])});
  }

  std::int64_t live = n0;  // accepted + pending panels
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double m = 0.5 * (p.a + p.b);
    const double lm = 0.5 * (p.a + m);
    const double rm = 0.5 * (m + p.b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(p.a, m, p.fa, flm, p.fm);
    const double right = simpson(m, p.b, p.fm, frm, p.fb);
    const double delta = left + right - p.whole;
    const bool too_narrow = !(lm > p.a && rm < p.b);
    if (std::abs(delta) / 15.0 <= options.abs_tolerance || live >= options.max_panels ||
        too_narrow) {
      result.value += left + right + delta / 15.0;
      result.abs_error_estimate += std::abs(delta) / 15.0;
      ++result.panels;
      continue;
    }
    ++live;
    stack.push_back({m, p.b, p.fm, frm, p.fb, right});
    stack.push_back({p.a, m, p.fa, flm, p.fm, left});
  }
  return result;
}

}  // namespace anglebound
