#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include <Eigen/Dense>

namespace anglebound {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Stateless generator: every draw is a pure function of (seed, index, slot),
/// so samples can be produced in any order or partition with identical values.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

  std::uint64_t bits(std::uint64_t index, std::uint64_t slot) const noexcept;
  /// Uniform in (0, 1).
  double uniform(std::uint64_t index, std::uint64_t slot) const noexcept;
  /// Standard normal (Box-Muller on slots 2k and 2k + 1).
  double normal(std::uint64_t index, std::uint64_t k) const noexcept;
  /// Uniform direction on S^{dim-1}: normalized vector of independent normals.
  Eigen::VectorXd direction(std::uint64_t index, int dim) const;

 private:
  std::uint64_t seed_;
};

/// Sequential xoshiro256** generator for the optimization heuristics.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept;

  std::uint64_t next() noexcept;
  double uniform() noexcept;  // in [0, 1)
  double normal() noexcept;
  std::size_t below(std::size_t n) noexcept;  // uniform in [0, n)
  Eigen::VectorXd normal_vector(int dim);
  Eigen::VectorXd direction(int dim);

 private:
  std::uint64_t s_[4];
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Runs body(begin, end) over [0, count) split into `threads` contiguous chunks.
/// Chunk boundaries depend only on (count, threads).
void parallel_chunks(std::size_t count, unsigned threads,
                     const std::function<void(std::size_t, std::size_t, unsigned)>& body);

}  // namespace anglebound
