#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace anglebound {

/// Failure categories raised by the library. Every code denotes a violated
/// precondition of the caller; internal bugs surface as std::logic_error.
enum class ErrorCode {
  InvalidInput,
  DegenerateTriple,
  OutOfRange,
  Overflow,
  DegenerateSimplex,
  NotInterior,
  NotInHull,
  NotConvexPosition,
  DegenerateHull,
  NotHemispherical,
  CapTooSmall,
  ScaleExhausted,
  HypothesisViolated,
  ColoringFailed,
  CoverageFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the cone covering certificate when the rays leaving a vertex need
/// a wider cap than the requested half-angle.
class CapTooSmallError : public Error {
 public:
  CapTooSmallError(std::size_t vertex, double required_radius, double eta);

  std::size_t vertex() const noexcept { return vertex_; }
  double required_radius() const noexcept { return required_radius_; }

 private:
  std::size_t vertex_;
  double required_radius_;
};

}  // namespace anglebound
