#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace anglebound {

/// Coloring of the edges of the complete graph on n vertices with m colors.
class EdgeColoring {
 public:
  EdgeColoring(std::size_t n, int m);

  std::size_t vertex_count() const noexcept { return n_; }
  int color_count() const noexcept { return m_; }

  void set(std::size_t i, std::size_t j, int color);
  /// Throws InvalidInput if the pair was never colored.
  int color(std::size_t i, std::size_t j) const;
  bool complete() const noexcept;

 private:
  std::size_t slot(std::size_t i, std::size_t j) const;

  std::size_t n_;
  int m_;
  std::vector<int> colors_;
};

struct MonochromaticCycle {
  int color = 0;
  std::vector<std::size_t> vertices;  // consecutive entries (cyclically) are adjacent
};

/// True when `cycle` has odd length >= 3, distinct vertices, and every edge in `color`.
bool is_monochromatic_odd_cycle(const EdgeColoring& coloring, const MonochromaticCycle& cycle);

/// Odd cycle inside one color class found by BFS two-coloring, if the class is
/// not bipartite.
std::optional<MonochromaticCycle> odd_cycle_in_color(const EdgeColoring& coloring, int color);

/// Pigeonhole route: with n > 2^m two vertices share their parity vector across
/// all color-class BFS forests; their edge closes an odd cycle with the tree
/// path of its color. Returns nullopt when no such pair exists.
std::optional<MonochromaticCycle> odd_cycle_by_parity_labels(const EdgeColoring& coloring);

/// Any m-coloring of K_n with n >= 2^m + 1 contains a monochromatic odd cycle.
/// Tries every color class first, then the parity-label argument. The result is
/// verified before it is returned. Throws HypothesisViolated for n <= 2^m.
MonochromaticCycle find_mono_odd_cycle(const EdgeColoring& coloring);

}  // namespace anglebound
