#include "anglebound/lines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "anglebound/errors.hpp"
#include "anglebound/random.hpp"

namespace anglebound {

Angle line_angle(const UnitVector& u, const UnitVector& v) {
  return Angle(std::acos(std::clamp(std::abs(u.dot(v)), 0.0, 1.0)));
}

UnitVector canonical_orientation(const UnitVector& v) {
  for (Eigen::Index k = 0; k < v.dim(); ++k) {
    if (std::abs(v[k]) > 1e-12) return v[k] < 0.0 ? UnitVector(-v.coords()) : v;
  }
  return v;
}

LineArrangement::LineArrangement(int dim, std::vector<UnitVector> lines) : dim_(dim) {
  if (dim < 2) throw Error(ErrorCode::InvalidInput, "line arrangements need dimension >= 2");
  if (lines.empty()) throw Error(ErrorCode::InvalidInput, "empty line arrangement");
  lines_.reserve(lines.size());
  for (auto& l : lines) {
    if (l.dim() != dim) throw Error(ErrorCode::InvalidInput, "line dimension mismatch");
    lines_.push_back(canonical_orientation(l));
  }
  double best = std::numbers::pi / 2;
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    for (std::size_t j = i + 1; j < lines_.size(); ++j) {
      best = std::min(best, line_angle(lines_[i], lines_[j]).radians());
    }
  }
  min_angle_ = Angle(best);
}

std::size_t LineArrangement::first_line_within(const Eigen::VectorXd& d, double radius) const {
  const double n = d.norm();
  const double threshold = std::cos(radius) - 1e-12;
  for (std::size_t k = 0; k < lines_.size(); ++k) {
    if (std::abs(lines_[k].coords().dot(d)) / n >= threshold) return k;
  }
  return lines_.size();
}

namespace {

double exact_min_angle(const std::vector<Eigen::VectorXd>& u) {
  double max_cos = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      max_cos = std::max(max_cos, std::abs(u[i].dot(u[j])));
    }
  }
  return std::acos(std::min(1.0, max_cos));
}

struct PackRun {
  std::vector<Eigen::VectorXd> lines;
  double min_angle = -1.0;
};

PackRun pack_once(int m, int dim, int iters, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Eigen::VectorXd> u(static_cast<std::size_t>(m));
  for (auto& v : u) v = rng.direction(dim);
  PackRun best{u, exact_min_angle(u)};
  if (m < 2) return best;

  const double beta_start = 10.0;
  const double beta_end = 1e6;
  const double step_start = 0.2;
  const double step_end = 1e-7;
  std::vector<Eigen::VectorXd> grad(u.size(), Eigen::VectorXd::Zero(dim));
  std::vector<double> weights;
  for (int t = 0; t < iters; ++t) {
    const double frac = iters > 1 ? static_cast<double>(t) / (iters - 1) : 1.0;
    const double beta = beta_start * std::pow(beta_end / beta_start, frac);
    const double step = step_start * std::pow(step_end / step_start, frac);
    double top = 0.0;
    weights.clear();
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (std::size_t j = i + 1; j < u.size(); ++j) {
        const double c = std::abs(u[i].dot(u[j]));
        weights.push_back(c);
        top = std::max(top, c);
      }
    }
    double z = 0.0;
    for (auto& w : weights) {
      w = std::exp(beta * (w - top));
      z += w;
    }
    for (auto& g : grad) g.setZero();
    std::size_t k = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (std::size_t j = i + 1; j < u.size(); ++j, ++k) {
        const double c = u[i].dot(u[j]);
        const double w = weights[k] / z * (c < 0.0 ? -1.0 : 1.0);
        grad[i] += w * u[j];
        grad[j] += w * u[i];
      }
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      Eigen::VectorXd g = grad[i] - grad[i].dot(u[i]) * u[i];
      u[i] -= step * g;
      u[i].normalize();
    }
    const double a = exact_min_angle(u);
    if (a > best.min_angle) best = {u, a};
  }
  return best;
}

}  // namespace

LineArrangement pack_lines(int m, int dim, int iters, std::uint64_t seed,
                           const PackOptions& options) {
  if (m < 2) throw Error(ErrorCode::OutOfRange, "pack_lines needs m >= 2");
  if (dim < 2) throw Error(ErrorCode::OutOfRange, "pack_lines needs D >= 2");
  if (iters < 0) throw Error(ErrorCode::OutOfRange, "iteration count must be nonnegative");
  const int restarts = std::max(1, options.restarts);
  std::vector<PackRun> runs(static_cast<std::size_t>(restarts));
  parallel_chunks(runs.size(), options.threads, [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t r = begin; r < end; ++r) {
      runs[r] = pack_once(m, dim, iters, splitmix64(seed) ^ splitmix64(r + 1));
    }
  });
  std::size_t best = 0;
  for (std::size_t r = 1; r < runs.size(); ++r) {
    if (runs[r].min_angle > runs[best].min_angle) best = r;
  }
  std::vector<UnitVector> lines;
  for (const auto& v : runs[best].lines) lines.push_back(UnitVector::normalized(v));
  return LineArrangement(dim, std::move(lines));
}

namespace {

double radical_inverse(std::uint64_t i, std::uint64_t base) {
  double inv = 1.0 / static_cast<double>(base);
  double f = inv;
  double r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

constexpr std::uint64_t kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                     43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101};

Eigen::VectorXd canonical(Eigen::VectorXd v) {
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (std::abs(v[k]) > 1e-12) {
      if (v[k] < 0.0) v = -v;
      break;
    }
  }
  return v;
}

}  // namespace

std::vector<Eigen::VectorXd> probe_lines(int dim, std::size_t count, std::uint64_t seed) {
  std::vector<Eigen::VectorXd> probes;
  probes.reserve(count);
  const CounterRng shifts(seed);
  if (dim == 2) {
    const double offset = shifts.uniform(0, 0);
    for (std::size_t j = 0; j < count; ++j) {
      const double phi = std::numbers::pi * (static_cast<double>(j) + offset) / static_cast<double>(count);
      Eigen::VectorXd v(2);
      v << std::cos(phi), std::sin(phi);
      probes.push_back(canonical(v));
    }
    return probes;
  }
  const int pairs = (dim + 1) / 2;
  if (2 * pairs > static_cast<int>(std::size(kPrimes))) {
    throw Error(ErrorCode::OutOfRange, "probe generator supports D <= 26");
  }
  for (std::size_t j = 0; j < count; ++j) {
    Eigen::VectorXd v(dim);
    for (int p = 0; p < pairs; ++p) {
      double u1 = radical_inverse(j + 1, kPrimes[2 * p]) + shifts.uniform(0, 2 * p);
      double u2 = radical_inverse(j + 1, kPrimes[2 * p + 1]) + shifts.uniform(0, 2 * p + 1);
      u1 -= std::floor(u1);
      u2 -= std::floor(u2);
      if (u1 <= 0.0) u1 = 0x1.0p-53;
      const double r = std::sqrt(-2.0 * std::log(u1));
      v[2 * p] = r * std::cos(2.0 * std::numbers::pi * u2);
      if (2 * p + 1 < dim) v[2 * p + 1] = r * std::sin(2.0 * std::numbers::pi * u2);
    }
    const double n = v.norm();
    if (n < 1e-12) continue;
    probes.push_back(canonical(v / n));
  }
  return probes;
}

namespace {

std::vector<UnitVector> planar_cover(Angle rho, std::uint64_t seed) {
  const auto k = static_cast<std::size_t>(std::ceil(std::numbers::pi / rho.radians() - 1e-12));
  const double spacing = std::numbers::pi / static_cast<double>(k);
  const double offset = CounterRng(seed).uniform(1, 0) * spacing;
  std::vector<UnitVector> lines;
  for (std::size_t j = 0; j < k; ++j) {
    const double phi = offset + spacing * static_cast<double>(j);
    Eigen::VectorXd v(2);
    v << std::cos(phi), std::sin(phi);
    lines.emplace_back(v);
  }
  return lines;
}

std::vector<UnitVector> greedy_cover(const std::vector<Eigen::VectorXd>& probes, double cos_r,
                                     std::uint64_t seed, const CoverOptions& options) {
  Rng rng(seed);
  std::vector<std::size_t> uncovered(probes.size());
  for (std::size_t i = 0; i < probes.size(); ++i) uncovered[i] = i;
  std::vector<UnitVector> lines;

  auto count_covered = [&](const Eigen::VectorXd& c) {
    std::size_t hits = 0;
    for (auto i : uncovered) {
      if (std::abs(c.dot(probes[i])) >= cos_r) ++hits;
    }
    return hits;
  };

  while (!uncovered.empty()) {
    if (lines.size() >= options.max_lines) {
      throw Error(ErrorCode::CoverageFailed,
                  "probe set not covered within " + std::to_string(options.max_lines) + " lines");
    }
    Eigen::VectorXd best_line = probes[uncovered.front()];
    std::size_t best_hits = 0;
    for (int c = 0; c < options.candidates; ++c) {
      const Eigen::VectorXd& cand = probes[uncovered[rng.below(uncovered.size())]];
      const std::size_t hits = count_covered(cand);
      if (hits > best_hits) {
        best_hits = hits;
        best_line = cand;
      }
    }
    // Recenter on the mean of the probes the line picks up.
    for (int pass = 0; pass < 4; ++pass) {
      Eigen::VectorXd mean = Eigen::VectorXd::Zero(best_line.size());
      for (auto i : uncovered) {
        const double d = best_line.dot(probes[i]);
        if (std::abs(d) >= cos_r) mean += d < 0.0 ? Eigen::VectorXd(-probes[i]) : probes[i];
      }
      if (mean.norm() < 1e-12) break;
      const Eigen::VectorXd moved = mean.normalized();
      const std::size_t hits = count_covered(moved);
      if (hits < best_hits) break;
      best_hits = hits;
      best_line = moved;
    }
    lines.push_back(UnitVector::normalized(best_line));
    std::erase_if(uncovered,
                  [&](std::size_t i) { return std::abs(best_line.dot(probes[i])) >= cos_r; });
  }
  return lines;
}

}  // namespace

CoverReport cover_lines(Angle rho, int dim, std::uint64_t seed, const CoverOptions& options) {
  if (!(rho.radians() > 0.0 && rho.radians() < std::numbers::pi)) {
    throw Error(ErrorCode::OutOfRange, "rho must lie in (0, pi)");
  }
  if (dim < 2) throw Error(ErrorCode::OutOfRange, "cover_lines needs D >= 2");
  if (options.probes == 0) throw Error(ErrorCode::OutOfRange, "need at least one probe");
  const double radius = rho.radians() / 2.0;
  const double cos_r = std::cos(radius) - 1e-12;
  const auto probes = probe_lines(dim, options.probes, splitmix64(seed ^ 0x5eedULL));

  std::vector<UnitVector> lines =
      dim == 2 ? planar_cover(rho, seed) : greedy_cover(probes, cos_r, splitmix64(seed), options);

  double worst = 0.0;
  for (const auto& p : probes) {
    double best = 0.0;
    for (const auto& l : lines) best = std::max(best, std::abs(l.coords().dot(p)));
    if (best < cos_r) {
      throw Error(ErrorCode::CoverageFailed, "probe left uncovered by the chosen lines");
    }
    worst = std::max(worst, std::acos(std::min(1.0, best)));
  }

  CoverReport report{LineArrangement(dim, std::move(lines)), rho, probes.size(), worst, 0.0};
  // Half the area of S^{D-1}: the projective sphere of lines.
  const double half_area = std::pow(std::numbers::pi, dim / 2.0) / std::tgamma(dim / 2.0);
  report.probe_spacing = std::pow(half_area / static_cast<double>(probes.size()), 1.0 / (dim - 1));
  return report;
}

double packing_constant(const LineArrangement& packing) {
  const double m = static_cast<double>(packing.size());
  return packing.min_pairwise_angle().radians() * std::pow(m, 1.0 / (packing.dim() - 1)) *
         (1.0 - 1e-12);
}

double covering_constant(const LineArrangement& covering, Angle rho) {
  const double m = static_cast<double>(covering.size());
  return rho.radians() * std::pow(m, 1.0 / (covering.dim() - 1)) * (1.0 + 1e-12);
}

}  // namespace anglebound
