#include "anglebound/random.hpp"

#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

namespace anglebound {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

namespace {

double to_open_unit(std::uint64_t bits) noexcept {
  // 53 random bits, shifted by half an ulp so 0 is never produced.
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

std::uint64_t CounterRng::bits(std::uint64_t index, std::uint64_t slot) const noexcept {
  return splitmix64(splitmix64(seed_ ^ splitmix64(index)) + 0xD1B54A32D192ED03ULL * slot);
}

double CounterRng::uniform(std::uint64_t index, std::uint64_t slot) const noexcept {
  return to_open_unit(bits(index, slot));
}

double CounterRng::normal(std::uint64_t index, std::uint64_t k) const noexcept {
  const double u1 = uniform(index, 2 * (k / 2));
  const double u2 = uniform(index, 2 * (k / 2) + 1);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  return (k % 2 == 0) ? r * std::cos(phi) : r * std::sin(phi);
}

Eigen::VectorXd CounterRng::direction(std::uint64_t index, int dim) const {
  Eigen::VectorXd v(dim);
  double n2 = 0.0;
  for (std::uint64_t attempt = 0;; ++attempt) {
    for (int k = 0; k < dim; ++k) {
      v[k] = normal(index, static_cast<std::uint64_t>(k) + attempt * 2 * static_cast<std::uint64_t>(dim));
    }
    n2 = v.squaredNorm();
    if (n2 > 1e-300) break;
  }
  return v / std::sqrt(n2);
}

Rng::Rng(std::uint64_t seed) noexcept {
  std::uint64_t x = seed;
  for (auto& s : s_) {
    x = splitmix64(x);
    s = x;
  }
}

namespace {
std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }
}  // namespace

std::uint64_t Rng::next() noexcept {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::normal() noexcept {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = to_open_unit(next());
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  has_spare_ = true;
  return r * std::cos(phi);
}

std::size_t Rng::below(std::size_t n) noexcept {
  return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
}

Eigen::VectorXd Rng::normal_vector(int dim) {
  Eigen::VectorXd v(dim);
  for (int k = 0; k < dim; ++k) v[k] = normal();
  return v;
}

Eigen::VectorXd Rng::direction(int dim) {
  for (;;) {
    Eigen::VectorXd v = normal_vector(dim);
    const double n = v.norm();
    if (n > 1e-150) return v / n;
  }
}

void parallel_chunks(std::size_t count, unsigned threads,
                     const std::function<void(std::size_t, std::size_t, unsigned)>& body) {
  if (threads <= 1 || count < 2) {
    body(0, count, 0);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(threads, count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = count * w / workers;
    const std::size_t end = count * (w + 1) / workers;
    pool.emplace_back(body, begin, end, static_cast<unsigned>(w));
  }
  for (auto& t : pool) t.join();
}

}  // namespace anglebound
