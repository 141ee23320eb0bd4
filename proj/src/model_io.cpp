#include "negsq/model_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace negsq {

namespace {

using nlohmann::json;

std::string where(std::size_t row, std::size_t col) {
  return "row " + std::to_string(row) + ", column " + std::to_string(col);
}

Integer integer_from_json(const json& v, const std::string& context) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(v.get<std::uint64_t>());
    return Integer(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    try {
      return parse_integer(v.get<std::string>());
    } catch (const ValidationError&) {
    }
  }
  throw ValidationError(context + ": expected an integer, got " + v.dump());
}

}  // namespace

ManifoldModel model_from_json(const json& doc) {
  if (!doc.is_object()) throw ValidationError("manifold document must be a JSON object");
  const bool has_gram = doc.contains("gram");
  const bool has_invariants = doc.contains("b2") || doc.contains("sigma") || doc.contains("spin");
  if (has_gram && has_invariants)
    throw ValidationError("manifold document has both \"gram\" and invariant fields");

  if (has_gram) {
    const json& gram = doc.at("gram");
    if (!gram.is_array() || gram.empty())
      throw GramValidationError("\"gram\" must be a non-empty array of rows", {}, {});
    IntMatrix rows;
    rows.reserve(gram.size());
    for (std::size_t i = 0; i < gram.size(); ++i) {
      const json& row = gram[i];
      if (!row.is_array())
        throw GramValidationError("row " + std::to_string(i) + " is not an array", i, {});
      std::vector<Integer> values;
      values.reserve(row.size());
      for (std::size_t j = 0; j < row.size(); ++j) {
        try {
          values.push_back(integer_from_json(row[j], where(i, j)));
        } catch (const ValidationError& e) {
          throw GramValidationError(e.what(), i, j);
        }
      }
      rows.push_back(std::move(values));
    }
    return ManifoldModel::from_form(GramForm::from_rows(std::move(rows)));
  }

  if (!doc.contains("b2") || !doc.contains("sigma") || !doc.contains("spin"))
    throw ValidationError("manifold document needs \"gram\" or all of \"b2\", \"sigma\", \"spin\"");
  if (!doc.at("spin").is_boolean()) throw ValidationError("\"spin\" must be a boolean");
  return ManifoldModel::from_invariants(integer_from_json(doc.at("b2"), "b2"),
                                        integer_from_json(doc.at("sigma"), "sigma"),
                                        doc.at("spin").get<bool>());
}

ManifoldModel model_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  return model_from_json(doc);
}

ManifoldModel model_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return model_from_json_text(buffer.str());
}

json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return json(v.convert_to<std::int64_t>());
  return json(v.str());
}

json rational_to_json(const Rational& r) {
  return json{{"num", integer_to_json(numerator_of(r))},
              {"den", integer_to_json(denominator_of(r))}};
}

}  // namespace negsq
