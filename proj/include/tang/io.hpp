#pragma once

#include "tang/bounds.hpp"
#include "tang/feasibility.hpp"
#include "tang/polygon.hpp"
#include "tang/shapes.hpp"
#include "tang/torsion.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace tang::io {

/// Polygon JSON schema: { "rho": number, "angles_deg": [...] } or
/// { "rho": number, "tangent_lengths": [...] } — exactly one list present.
TangentialPolygon polygon_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GeometricReport& r);
GeometricReport report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BoundsReport& r);
BoundsReport bounds_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FeasibilityResult& r);
nlohmann::json to_json(const TorsionSolution& r);

/// Floats printed with 17 significant digits (round-trip exact).
std::string format_double(double v);

/// Diagram CSV: header `family,n,param1,param2,x,y`, rows in input order.
std::string diagram_csv(const std::vector<DiagramSample>& samples);

/// Reference-table CSV: the verbatim columns, plus, for each recomputable
/// column, the closed-form recomputation and per-cell relative deviation.
std::string table_csv(TableId id);

std::vector<double> parse_side_list(const std::string& csv);

} // namespace tang::io
