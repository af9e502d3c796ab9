#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cox/catalog.hpp"
#include "cox/powersum.hpp"

namespace cox::cli {

using Json = nlohmann::ordered_json;

/// Exact value for machine output: int64 integers as numbers, anything else
/// as an "a" or "a/b" string.
Json to_json(const Rational& v);

enum class Format { Json, Csv, Latex, Pretty };

Format parse_format(const std::string& text);

/// Uniform rows plus the column order each text format should use.
struct Document {
  std::vector<std::string> columns;
  std::vector<std::string> latex_columns;
  std::vector<Json> rows;
  /// Emit the single row as a bare JSON object instead of an array.
  bool single = false;
};

void render(const Document& doc, Format format, std::ostream& out);

Document info_document(const CoxeterType& t, Profile profile, const std::optional<Rational>& beta);
Document exponents_document(const CoxeterType& t);
Document table_document(const std::vector<CoxeterType>& types, int n_max, Method method, int p);

/// Entry point behind `cox`; returns 0, 1 or 2.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cox::cli
