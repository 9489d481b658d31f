#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "anglebound/geometry.hpp"

namespace anglebound::io {

/// {"dim": D, "points": [[...], ...]}
nlohmann::json point_set_to_json(const PointSet& points);
PointSet point_set_from_json(const nlohmann::json& doc);

/// One point per row, comma separated. A non-numeric first row is taken as a header.
std::string point_set_to_csv(const PointSet& points);
PointSet point_set_from_csv(std::string_view text);

/// Chooses the format from the extension: ".csv" is CSV, anything else JSON.
PointSet read_point_set(const std::filesystem::path& path);
void write_point_set(const std::filesystem::path& path, const PointSet& points);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace anglebound::io
