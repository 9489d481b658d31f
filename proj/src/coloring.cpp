#include "anglebound/coloring.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "anglebound/errors.hpp"

namespace anglebound {

EdgeColoring::EdgeColoring(std::size_t n, int m) : n_(n), m_(m), colors_(n * (n - (n > 0)) / 2, -1) {
  if (m < 1) throw Error(ErrorCode::InvalidInput, "need at least one color");
}

std::size_t EdgeColoring::slot(std::size_t i, std::size_t j) const {
  if (i == j || i >= n_ || j >= n_) throw Error(ErrorCode::InvalidInput, "invalid edge");
  if (i > j) std::swap(i, j);
  // Row-major upper triangle without the diagonal.
  return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
}

void EdgeColoring::set(std::size_t i, std::size_t j, int color) {
  if (color < 0 || color >= m_) throw Error(ErrorCode::InvalidInput, "color out of range");
  colors_[slot(i, j)] = color;
}

int EdgeColoring::color(std::size_t i, std::size_t j) const {
  const int c = colors_[slot(i, j)];
  if (c < 0) throw Error(ErrorCode::InvalidInput, "edge has no color");
  return c;
}

bool EdgeColoring::complete() const noexcept {
  return std::none_of(colors_.begin(), colors_.end(), [](int c) { return c < 0; });
}

bool is_monochromatic_odd_cycle(const EdgeColoring& coloring, const MonochromaticCycle& cycle) {
  const auto& v = cycle.vertices;
  if (v.size() < 3 || v.size() % 2 == 0) return false;
  auto sorted = v;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const std::size_t a = v[k];
    const std::size_t b = v[(k + 1) % v.size()];
    if (a >= coloring.vertex_count() || b >= coloring.vertex_count()) return false;
    if (coloring.color(a, b) != cycle.color) return false;
  }
  return true;
}

namespace {

struct BfsForest {
  std::vector<std::size_t> parent;
  std::vector<std::size_t> depth;
  std::vector<std::size_t> root;
};

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Builds the BFS forest of one color class. When `conflict` is given, stops at
// the first edge joining two vertices of equal depth parity in the same tree.
BfsForest bfs_forest(const EdgeColoring& coloring, int color,
                     std::pair<std::size_t, std::size_t>* conflict) {
  const std::size_t n = coloring.vertex_count();
  BfsForest f{std::vector<std::size_t>(n, kNone), std::vector<std::size_t>(n, kNone),
              std::vector<std::size_t>(n, kNone)};
  std::vector<std::size_t> queue;
  for (std::size_t s = 0; s < n; ++s) {
    if (f.depth[s] != kNone) continue;
    f.depth[s] = 0;
    f.root[s] = s;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t v = queue[head];
      for (std::size_t w = 0; w < n; ++w) {
        if (w == v || coloring.color(v, w) != color) continue;
        if (f.depth[w] == kNone) {
          f.depth[w] = f.depth[v] + 1;
          f.parent[w] = v;
          f.root[w] = s;
          queue.push_back(w);
        } else if (conflict != nullptr && f.depth[w] % 2 == f.depth[v] % 2) {
          *conflict = {v, w};
          return f;
        }
      }
    }
  }
  return f;
}

// Cycle formed by the tree paths from u and w to their common ancestor plus the edge (u, w).
std::vector<std::size_t> close_cycle(const BfsForest& f, std::size_t u, std::size_t w) {
  std::vector<std::size_t> up_u{u}, up_w{w};
  std::size_t a = u, b = w;
  while (f.depth[a] > f.depth[b]) up_u.push_back(a = f.parent[a]);
  while (f.depth[b] > f.depth[a]) up_w.push_back(b = f.parent[b]);
  while (a != b) {
    up_u.push_back(a = f.parent[a]);
    up_w.push_back(b = f.parent[b]);
  }
  // up_u ends at the ancestor; append w's branch reversed without repeating it.
  std::vector<std::size_t> cycle = up_u;
  for (auto it = up_w.rbegin() + 1; it != up_w.rend(); ++it) cycle.push_back(*it);
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

}  // namespace

std::optional<MonochromaticCycle> odd_cycle_in_color(const EdgeColoring& coloring, int color) {
  std::pair<std::size_t, std::size_t> conflict{kNone, kNone};
  const BfsForest f = bfs_forest(coloring, color, &conflict);
  if (conflict.first == kNone) return std::nullopt;
  return MonochromaticCycle{color, close_cycle(f, conflict.first, conflict.second)};
}

std::optional<MonochromaticCycle> odd_cycle_by_parity_labels(const EdgeColoring& coloring) {
  const std::size_t n = coloring.vertex_count();
  const int m = coloring.color_count();
  std::vector<BfsForest> forests;
  forests.reserve(static_cast<std::size_t>(m));
  for (int c = 0; c < m; ++c) forests.push_back(bfs_forest(coloring, c, nullptr));

  std::map<std::vector<bool>, std::size_t> seen;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<bool> label(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) label[static_cast<std::size_t>(c)] = forests[static_cast<std::size_t>(c)].depth[v] % 2 == 1;
    auto [it, fresh] = seen.emplace(label, v);
    if (fresh) continue;
    const std::size_t u = it->second;
    const int c = coloring.color(u, v);
    const BfsForest& f = forests[static_cast<std::size_t>(c)];
    // u and v are adjacent in color c, hence in one tree, with equal parity.
    return MonochromaticCycle{c, close_cycle(f, u, v)};
  }
  return std::nullopt;
}

MonochromaticCycle find_mono_odd_cycle(const EdgeColoring& coloring) {
  const std::size_t n = coloring.vertex_count();
  const int m = coloring.color_count();
  if (m >= 62 || n <= (std::size_t{1} << m)) {
    throw Error(ErrorCode::HypothesisViolated,
                "need n >= 2^m + 1 vertices (n = " + std::to_string(n) +
                    ", m = " + std::to_string(m) + ")");
  }
  if (!coloring.complete()) throw Error(ErrorCode::InvalidInput, "coloring is not total");
  std::optional<MonochromaticCycle> found;
  for (int c = 0; c < m && !found; ++c) found = odd_cycle_in_color(coloring, c);
  if (!found) found = odd_cycle_by_parity_labels(coloring);
  if (!found || !is_monochromatic_odd_cycle(coloring, *found)) {
    throw std::logic_error("monochromatic odd cycle search failed verification");
  }
  return *found;
}

}  // namespace anglebound
