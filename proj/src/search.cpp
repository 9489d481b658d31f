#include "anglebound/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "anglebound/errors.hpp"
#include "anglebound/random.hpp"

namespace anglebound {

namespace {

constexpr double kCollisionDistance = 1e-6;  // relative to unit RMS radius

struct Energy {
  double exact = 0.0;
  double smooth = 0.0;
};

// Exact maximum and log-sum-exp of all triple angles; +inf for near-coincident points.
Energy triple_energy(std::span<const Point> pts, double sharpness) {
  const std::size_t n = pts.size();
  if (n < 3) return {0.0, 0.0};
  if (min_pairwise_distance(pts) < kCollisionDistance) {
    const double inf = std::numeric_limits<double>::infinity();
    return {inf, inf};
  }
  std::vector<double> angles;
  angles.reserve(n * (n - 1) * (n - 2) / 2);
  std::vector<Eigen::VectorXd> dirs(n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      if (x != y) dirs[x] = (pts[x] - pts[y]).normalized();
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (x == y) continue;
      for (std::size_t z = x + 1; z < n; ++z) {
        if (z == y) continue;
        angles.push_back(std::acos(std::clamp(dirs[x].dot(dirs[z]), -1.0, 1.0)));
      }
    }
  }
  const double top = *std::max_element(angles.begin(), angles.end());
  double sum = 0.0;
  for (double a : angles) sum += std::exp(sharpness * (a - top));
  return {max_angle(pts).radians(), top + std::log(sum) / sharpness};
}

void normalize_configuration(std::vector<Point>& pts) {
  Eigen::VectorXd centroid = Eigen::VectorXd::Zero(pts.front().size());
  for (const auto& p : pts) centroid += p;
  centroid /= static_cast<double>(pts.size());
  double rms = 0.0;
  for (auto& p : pts) {
    p -= centroid;
    rms += p.squaredNorm();
  }
  rms = std::sqrt(rms / static_cast<double>(pts.size()));
  if (rms > 0.0) {
    for (auto& p : pts) p /= rms;
  }
}

struct AnnealRun {
  std::vector<Point> best;
  double best_angle = std::numeric_limits<double>::infinity();
  std::int64_t steps = 0;
};

AnnealRun anneal(std::vector<Point> pts, int iters, Rng& rng, const AnnealOptions& opt,
                 double target) {
  normalize_configuration(pts);
  AnnealRun run;
  double current = triple_energy(pts, opt.sharpness_start).exact;
  run.best = pts;
  run.best_angle = current;
  if (current <= target) return run;

  const int dim = static_cast<int>(pts.front().size());
  double temperature = opt.initial_temperature;
  std::vector<Point> candidate;
  std::vector<Point> chosen;
  for (int step = 0; step < iters; ++step) {
    ++run.steps;
    const double frac = iters > 1 ? static_cast<double>(step) / (iters - 1) : 1.0;
    const double sharpness =
        opt.sharpness_start * std::pow(opt.sharpness_end / opt.sharpness_start, frac);
    const double sigma = opt.initial_step * std::sqrt(temperature / opt.initial_temperature);
    const std::size_t i = rng.below(pts.size());

    double best_smooth = std::numeric_limits<double>::infinity();
    double chosen_exact = std::numeric_limits<double>::infinity();
    for (int k = 0; k < std::max(1, opt.proposals); ++k) {
      candidate = pts;
      candidate[i] += sigma * rng.normal_vector(dim);
      const Energy e = triple_energy(candidate, sharpness);
      if (e.smooth < best_smooth) {
        best_smooth = e.smooth;
        chosen_exact = e.exact;
        chosen = candidate;
      }
    }
    if (std::isfinite(chosen_exact)) {
      const double delta = chosen_exact - current;
      if (delta <= 0.0 || rng.uniform() < std::exp(-delta / temperature)) {
        pts = chosen;
        current = chosen_exact;
        normalize_configuration(pts);
        if (current < run.best_angle) {
          run.best_angle = current;
          run.best = pts;
          if (current <= target) return run;
        }
      }
    }
    temperature = std::max(opt.min_temperature, temperature * opt.cooling);
  }
  return run;
}

std::vector<Point> regular_simplex(int n, int dim) {
  // Centered standard basis of R^n, expressed in an orthonormal basis of its span.
  const Eigen::MatrixXd centered =
      Eigen::MatrixXd::Identity(n, n) - Eigen::MatrixXd::Constant(n, n, 1.0 / n);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeFullV);
  const Eigen::MatrixXd coords = centered * svd.matrixV().leftCols(n - 1);
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) {
    Point p = Point::Zero(dim);
    p.head(n - 1) = coords.row(i).transpose();
    pts.push_back(p);
  }
  return pts;
}

std::vector<Point> hypercube_vertices(int count, int dim) {
  std::vector<Point> pts;
  for (int v = 0; v < count; ++v) {
    Point p(dim);
    for (int k = 0; k < dim; ++k) p[k] = (v >> k) & 1;
    pts.push_back(p);
  }
  return pts;
}

std::vector<Point> cross_polytope_vertices(int count, int dim) {
  std::vector<Point> pts;
  for (int v = 0; v < count; ++v) {
    Point p = Point::Zero(dim);
    p[v / 2] = (v % 2 == 0) ? 1.0 : -1.0;
    pts.push_back(p);
  }
  return pts;
}

std::vector<Point> regular_polygon(int count, int dim) {
  std::vector<Point> pts;
  for (int v = 0; v < count; ++v) {
    Point p = Point::Zero(dim);
    const double phi = 2.0 * std::numbers::pi * v / count;
    p[0] = std::cos(phi);
    p[1] = std::sin(phi);
    pts.push_back(p);
  }
  return pts;
}

}  // namespace

double soft_max_angle(std::span<const Point> points, double sharpness) {
  return triple_energy(points, sharpness).smooth;
}

std::vector<std::vector<Point>> warm_starts(int n, int dim) {
  std::vector<std::vector<Point>> starts;
  if (n <= dim + 1) starts.push_back(regular_simplex(n, dim));
  if (dim < 30 && n <= (1 << dim)) starts.push_back(hypercube_vertices(n, dim));
  if (n <= 2 * dim) starts.push_back(cross_polytope_vertices(n, dim));
  if (dim >= 2 && n >= 3) starts.push_back(regular_polygon(n, dim));
  return starts;
}

SearchResult minimize_max_angle(int n, int dim, int iters, int restarts, std::uint64_t seed,
                                const AnnealOptions& options) {
  if (n < 3) throw Error(ErrorCode::OutOfRange, "minimize_max_angle needs n >= 3");
  if (dim < 2) throw Error(ErrorCode::OutOfRange, "minimize_max_angle needs D >= 2");
  if (iters < 0 || restarts < 0) throw Error(ErrorCode::OutOfRange, "negative budget");

  std::vector<std::vector<Point>> starts = warm_starts(n, dim);
  for (int r = 0; r < restarts; ++r) {
    Rng init(splitmix64(seed) ^ splitmix64(0xC10D + static_cast<std::uint64_t>(r)));
    std::vector<Point> cloud;
    for (int i = 0; i < n; ++i) cloud.push_back(init.normal_vector(dim));
    starts.push_back(std::move(cloud));
  }

  std::vector<AnnealRun> runs(starts.size());
  parallel_chunks(starts.size(), options.threads, [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t r = begin; r < end; ++r) {
      Rng rng(splitmix64(seed + 0x9E37 * (r + 1)));
      runs[r] = anneal(starts[r], iters, rng, options, -1.0);
    }
  });

  std::size_t best = 0;
  std::int64_t steps = 0;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    steps += runs[r].steps;
    if (runs[r].best_angle < runs[best].best_angle) best = r;
  }
  PointSet points(dim, runs[best].best);
  const Angle achieved = max_angle(points);
  return {std::move(points), achieved, steps, seed, static_cast<int>(starts.size())};
}

SearchResult max_cardinality_search(Angle theta, int dim, std::int64_t budget, std::uint64_t seed) {
  if (!(theta.radians() > 0.0 && theta.radians() < std::numbers::pi)) {
    throw Error(ErrorCode::OutOfRange, "theta must lie in (0, pi)");
  }
  if (dim < 1) throw Error(ErrorCode::OutOfRange, "dimension must be >= 1");
  Rng rng(splitmix64(seed));
  std::int64_t used = 0;
  int restarts = 0;

  std::vector<Point> current{Point::Zero(dim), Point::Unit(dim, 0)};
  auto consider = [&](std::vector<Point> pts) {
    ++used;
    if (pts.size() > current.size() && max_angle(pts).radians() <= theta.radians()) {
      current = std::move(pts);
    }
  };
  if (dim >= 2) {
    if (dim <= 12) consider(hypercube_vertices(1 << dim, dim));
    consider(cross_polytope_vertices(2 * dim, dim));
    consider(regular_simplex(dim + 1, dim));
    for (int k = 3; k <= 64; ++k) consider(regular_polygon(k, dim));
  }
  normalize_configuration(current);

  AnnealOptions repair;
  int stall = 0;
  while (used < budget) {
    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(dim);
    for (const auto& p : current) centroid += p;
    centroid /= static_cast<double>(current.size());
    std::vector<Point> grown = current;
    grown.push_back(centroid + 1.5 * rng.normal_vector(dim) / std::sqrt(static_cast<double>(dim)));
    ++used;
    if (min_pairwise_distance(grown) >= kCollisionDistance &&
        max_angle(grown).radians() <= theta.radians()) {
      current = std::move(grown);
      normalize_configuration(current);
      stall = 0;
      continue;
    }
    if (++stall < 50 || dim < 2) continue;
    stall = 0;
    ++restarts;
    const int iters = static_cast<int>(std::min<std::int64_t>(2000, budget - used));
    AnnealRun run = anneal(grown, iters, rng, repair, theta.radians());
    used += run.steps * std::max(1, repair.proposals);
    if (run.best_angle <= theta.radians()) current = std::move(run.best);
  }

  PointSet points(dim, current);
  const Angle achieved = max_angle(points);
  return {std::move(points), achieved, used, seed, restarts};
}

}  // namespace anglebound
