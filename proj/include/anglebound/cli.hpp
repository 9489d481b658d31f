#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace anglebound::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr std::uint64_t kDefaultSeed = 20201;

/// Runs one subcommand. `args` excludes the program name. Returns 0 on
/// success, 2 on usage or precondition errors, 1 on internal failure.
int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Inclusive range "a..b" or "a..b:step"; a single number is a one-element range.
struct Range {
  double first = 0.0;
  double last = 0.0;
  double step = 1.0;
};
Range parse_range(std::string_view text);

/// CSV of cardinality bounds over dims x thetas (degrees).
std::string table_bound_grid(const Range& dims, const Range& theta_deg);

/// Command line equivalent to a manifest; `out` replaces the recorded output when nonempty.
std::vector<std::string> replay_arguments(const nlohmann::json& manifest, const std::string& out);

}  // namespace anglebound::cli
