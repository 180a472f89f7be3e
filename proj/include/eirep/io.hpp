#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "eirep/catalg.hpp"
#include "eirep/category.hpp"
#include "eirep/error.hpp"
#include "json.hpp"

namespace eirep {

/// A document that is not well-formed JSON or does not match its schema.
/// line and column are 1-based and 0 when the location is only known as a JSON path.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column, std::string path = "");
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& path() const { return path_; }

 private:
  std::size_t line_ = 0, column_ = 0;
  std::string path_;
};

inline constexpr const char* kCategorySchema = "eirep-category/1";
inline constexpr const char* kSubcategorySchema = "eirep-subcategory/1";
inline constexpr const char* kRepSchema = "eirep-rep/1";

struct CategoryDocument {
  std::string kind;  // "explicit" or "ei_quiver"
  CategoryPtr category;
  std::optional<EIQuiver> quiver;  // for "ei_quiver"
};

/// Parses JSON text with line and column information on syntax errors.
nlohmann::json parse_json(const std::string& text);
std::string read_file(const std::string& path);
/// Writes through a temporary file and a rename.
void write_file_atomic(const std::string& path, const std::string& content);

/// Throws ParseError for malformed or unresolved documents. The category is built without
/// checking the category axioms; an ei_quiver document must satisfy the EI quiver invariants.
CategoryDocument category_from_json(const nlohmann::json& j);
CategoryDocument load_category(const std::string& path);

nlohmann::json to_json(const FiniteCategory& c);  // kind "explicit"
nlohmann::json to_json(const EIQuiver& q);        // kind "ei_quiver"

/// {"objects": [...], "morphisms": [...]}; without "morphisms" the full subcategory.
Embedding subcategory_from_json(const nlohmann::json& j, const FiniteCategory& c);

/// Representation of c given by dims per object and matrices on generating morphisms.
CatRep rep_from_json(const nlohmann::json& j, CategoryPtr c);
nlohmann::json to_json(const CatRep& r);

}  // namespace eirep
