#pragma once

#include <json.hpp>

#include "qitineq/report.hpp"
#include "qitineq/tracial_map.hpp"

namespace qitineq {

// Matrix JSON: {"rows": n, "cols": n, "re": [[...]], "im": [[...]]}
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

// Block element JSON: {"shape": [n1, ...], "blocks": [matrixJSON, ...]}
nlohmann::json element_to_json(const BlockDiagonalElement& x);
BlockDiagonalElement element_from_json(const nlohmann::json& j);

// TracialMap JSON: {"kind": "...", "shape": [...], "inner": {...}?}
nlohmann::json map_to_json(const TracialMap& phi);
TracialMap map_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const MarginReport& r);
MarginReport report_from_json(const nlohmann::json& j);

// "2,2;3" -> [(2,2), (3)]
std::vector<AlgebraShape> parse_shapes(const std::string& text);
std::string shapes_to_string(const std::vector<AlgebraShape>& shapes);

}  // namespace qitineq
