#pragma once

#include <string>

#include "json.hpp"

#include "negsq/lattice.hpp"

namespace negsq {

/// Reads {"gram": [[...], ...]} or {"b2": int, "sigma": int, "spin": bool}.
/// Integer entries may be JSON integers or decimal strings (for values that do
/// not fit in 64 bits). Gram violations are reported with row/column.
ManifoldModel model_from_json(const nlohmann::json& doc);
ManifoldModel model_from_json_text(const std::string& text);
ManifoldModel model_from_file(const std::string& path);

/// Integer as a JSON number when it fits in 64 bits, decimal string otherwise.
nlohmann::json integer_to_json(const Integer& v);
/// {"num": ..., "den": ...} in lowest terms, den > 0.
nlohmann::json rational_to_json(const Rational& r);

}  // namespace negsq
