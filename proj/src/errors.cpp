#include "anglebound/errors.hpp"

#include <sstream>

namespace anglebound {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorCode::NotInterior: return "NotInterior";
    case ErrorCode::NotInHull: return "NotInHull";
    case ErrorCode::NotConvexPosition: return "NotConvexPosition";
    case ErrorCode::DegenerateHull: return "DegenerateHull";
    case ErrorCode::NotHemispherical: return "NotHemispherical";
    case ErrorCode::CapTooSmall: return "CapTooSmall";
    case ErrorCode::ScaleExhausted: return "ScaleExhausted";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::ColoringFailed: return "ColoringFailed";
    case ErrorCode::CoverageFailed: return "CoverageFailed";
  }
  return "Unknown";
}

namespace {
std::string cap_message(std::size_t vertex, double required, double eta) {
  std::ostringstream os;
  os.precision(17);
  os << "rays from vertex " << vertex << " need a cap of radius " << required
     << " > eta = " << eta;
  return os.str();
}
}  // namespace

CapTooSmallError::CapTooSmallError(std::size_t vertex, double required_radius, double eta)
    : Error(ErrorCode::CapTooSmall, cap_message(vertex, required_radius, eta)),
      vertex_(vertex),
      required_radius_(required_radius) {}

}  // namespace anglebound
