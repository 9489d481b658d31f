#include "anglebound/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "anglebound/errors.hpp"

namespace anglebound::io {

nlohmann::json point_set_to_json(const PointSet& points) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& p : points) {
    rows.push_back(std::vector<double>(p.data(), p.data() + p.size()));
  }
  return {{"dim", points.dim()}, {"points", rows}};
}

PointSet point_set_from_json(const nlohmann::json& doc) {
  try {
    const int dim = doc.at("dim").get<int>();
    std::vector<Point> pts;
    for (const auto& row : doc.at("points")) {
      const auto coords = row.get<std::vector<double>>();
      pts.push_back(Eigen::Map<const Eigen::VectorXd>(coords.data(),
                                                      static_cast<Eigen::Index>(coords.size())));
    }
    return PointSet(dim, std::move(pts));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed point set JSON: ") + e.what());
  }
}

std::string point_set_to_csv(const PointSet& points) {
  std::string out;
  char buf[32];
  for (const auto& p : points) {
    for (Eigen::Index k = 0; k < p.size(); ++k) {
      if (k > 0) out += ',';
      std::snprintf(buf, sizeof buf, "%.17g", p[k]);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

namespace {

bool parse_row(std::string_view line, std::vector<double>& row) {
  row.clear();
  std::size_t start = 0;
  while (start <= line.size()) {
    std::size_t end = line.find(',', start);
    if (end == std::string_view::npos) end = line.size();
    std::string_view cell = line.substr(start, end - start);
    while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) cell.remove_prefix(1);
    while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t' || cell.back() == '\r')) {
      cell.remove_suffix(1);
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc() || ptr != cell.data() + cell.size() || cell.empty()) return false;
    row.push_back(v);
    start = end + 1;
  }
  return true;
}

}  // namespace

PointSet point_set_from_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::vector<double> row;
  std::size_t line_no = 0;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    if (!parse_row(line, row)) {
      if (line_no == 1) continue;  // header
      throw Error(ErrorCode::InvalidInput, "unparsable CSV row " + std::to_string(line_no));
    }
    rows.push_back(row);
  }
  if (rows.empty()) throw Error(ErrorCode::InvalidInput, "CSV holds no points");
  return PointSet::from_rows(rows);
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

PointSet read_point_set(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  if (path.extension() == ".csv") return point_set_from_csv(text);
  try {
    return point_set_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("invalid JSON: ") + e.what());
  }
}

void write_point_set(const std::filesystem::path& path, const PointSet& points) {
  if (path.extension() == ".csv") {
    write_text(path, point_set_to_csv(points));
  } else {
    write_text(path, point_set_to_json(points).dump(2) + "\n");
  }
}

}  // namespace anglebound::io
