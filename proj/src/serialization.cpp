#include "anglebound/serialization.hpp"

#include <cmath>
#include <vector>

#include "anglebound/errors.hpp"
#include "anglebound/io.hpp"

namespace anglebound {

namespace {

nlohmann::json number(double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(); }

nlohmann::json angle(Angle a) { return number(a.radians()); }

nlohmann::json points_json(const std::vector<Point>& pts) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& p : pts) rows.push_back(to_json(p));
  return rows;
}

}  // namespace

nlohmann::json to_json(const Eigen::VectorXd& v) {
  nlohmann::json row = nlohmann::json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) row.push_back(number(v[k]));
  return row;
}

nlohmann::json to_json(const QuadratureResult& q) {
  return {{"value", number(q.value)},
          {"abs_error_estimate", number(q.abs_error_estimate)},
          {"panels", q.panels}};
}

nlohmann::json to_json(const BoundReport& r) {
  return {{"theta", angle(r.theta)},
          {"theta_deg", number(r.theta.degrees())},
          {"ambient_dim", r.ambient_dim},
          {"eta", angle(r.eta)},
          {"f_value", to_json(r.f_value)},
          {"bound", number(r.bound)},
          {"theorem_applicable", r.theorem_applicable}};
}

nlohmann::json to_json(const ConvexPositionVerdict& v) {
  nlohmann::json j{{"in_convex_position", v.in_convex_position}};
  j["witness_point"] = v.witness_point ? to_json(*v.witness_point) : nlohmann::json();
  j["witness_index"] = v.witness_index ? nlohmann::json(*v.witness_index) : nlohmann::json();
  j["witness_simplex"] = v.witness_simplex ? points_json(*v.witness_simplex) : nlohmann::json();
  return j;
}

nlohmann::json to_json(const ObtuseWitness& w) {
  return {{"vi", to_json(w.vi)},
          {"v", to_json(w.v)},
          {"vj", to_json(w.vj)},
          {"angle", angle(w.angle)},
          {"angle_deg", number(w.angle.degrees())}};
}

nlohmann::json to_json(const CurvatureEstimate& e) {
  nlohmann::json fr = nlohmann::json::array();
  nlohmann::json se = nlohmann::json::array();
  for (double f : e.fractions) fr.push_back(number(f));
  for (double s : e.std_error) se.push_back(number(s));
  double total = 0.0;
  for (double f : e.fractions) total += f;
  return {{"fractions", fr},     {"counts", e.counts}, {"std_error", se},
          {"samples", e.samples}, {"seed", e.seed},     {"sum", number(total)}};
}

nlohmann::json to_json(const Cone& c) {
  return {{"apex", to_json(c.apex())},
          {"axis", to_json(c.axis().coords())},
          {"half_angle", angle(c.half_angle())}};
}

nlohmann::json to_json(const LineArrangement& a) {
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& l : a.lines()) lines.push_back(to_json(l.coords()));
  return {{"dim", a.dim()},
          {"lines", lines},
          {"min_pairwise_angle", angle(a.min_pairwise_angle())},
          {"min_pairwise_angle_deg", number(a.min_pairwise_angle().degrees())}};
}

nlohmann::json to_json(const CoverReport& r) {
  nlohmann::json j = to_json(r.arrangement);
  j["rho"] = angle(r.rho);
  j["probe_count"] = r.probe_count;
  j["max_probe_angle"] = number(r.max_probe_angle);
  j["probe_spacing"] = number(r.probe_spacing);
  return j;
}

nlohmann::json to_json(const NBoundsReport& r) {
  return {{"theta", angle(r.theta)},
          {"d", r.d},
          {"c_d", number(r.c_d)},
          {"C_d", number(r.C_d)},
          {"lower", number(r.lower)},
          {"upper", number(r.upper)},
          {"log2_lower", number(r.log2_lower)},
          {"log2_upper_minus_one", number(r.log2_upper_minus_one)},
          {"lower_overflow", r.lower_overflow},
          {"upper_overflow", r.upper_overflow},
          {"ordered", r.ordered},
          {"lower_bound_size_threshold", number(r.lower_bound_size_threshold)}};
}

nlohmann::json to_json(const SearchResult& r) {
  return {{"label", "empirical"},
          {"points", io::point_set_to_json(r.points)},
          {"size", r.points.size()},
          {"achieved_angle", angle(r.achieved_angle)},
          {"achieved_angle_deg", number(r.achieved_angle.degrees())},
          {"iterations", r.iterations},
          {"seed", r.seed},
          {"restarts", r.restarts}};
}

LineArrangement line_arrangement_from_json(const nlohmann::json& doc) {
  try {
    const nlohmann::json& rows = doc.is_array() ? doc : doc.at("lines");
    std::vector<UnitVector> lines;
    for (const auto& row : rows) {
      const auto v = row.get<std::vector<double>>();
      lines.push_back(UnitVector::normalized(
          Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()))));
    }
    if (lines.empty()) throw Error(ErrorCode::InvalidInput, "arrangement has no lines");
    const int dim = doc.is_object() && doc.contains("dim") ? doc.at("dim").get<int>()
                                                          : static_cast<int>(lines.front().dim());
    return LineArrangement(dim, std::move(lines));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed arrangement JSON: ") + e.what());
  }
}

}  // namespace anglebound
