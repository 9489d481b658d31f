#pragma once

#include <json.hpp>

#include "anglebound/bounds.hpp"
#include "anglebound/convexity.hpp"
#include "anglebound/curvature.hpp"
#include "anglebound/erdos_furedi.hpp"
#include "anglebound/lines.hpp"
#include "anglebound/search.hpp"

namespace anglebound {

// JSON views of the library's result types. Doubles are emitted with
// round-trip precision; non-finite values become null.

nlohmann::json to_json(const Eigen::VectorXd& v);
nlohmann::json to_json(const QuadratureResult& q);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const ConvexPositionVerdict& v);
nlohmann::json to_json(const ObtuseWitness& w);
nlohmann::json to_json(const CurvatureEstimate& e);
nlohmann::json to_json(const Cone& c);
nlohmann::json to_json(const LineArrangement& a);
nlohmann::json to_json(const CoverReport& r);
nlohmann::json to_json(const NBoundsReport& r);
nlohmann::json to_json(const SearchResult& r);

/// Accepts {"dim": D, "lines": [[...], ...]} or a bare list of vectors.
LineArrangement line_arrangement_from_json(const nlohmann::json& doc);

}  // namespace anglebound
