#pragma once

// JSON serialization of categories and diagrams.

#include <filesystem>

#include <json.hpp>

#include "zcat/fincat.hpp"

namespace zcat {

// Parses the category format; unknown keys raise MalformedInput.
[[nodiscard]] CatPtr category_from_json(const nlohmann::json& doc);
// Writes every table entry explicitly, including generated identities.
[[nodiscard]] nlohmann::json category_to_json(const FinMonCat& cat);

// `shape` holds objects, arrows and composition; `assignment` maps shape
// objects and arrows to identifiers of `target`. Identity arrows of the shape
// may be left out of the assignment.
[[nodiscard]] Diagram diagram_from_json(const nlohmann::json& doc, const CatPtr& target);
[[nodiscard]] nlohmann::json diagram_to_json(const Diagram& diagram);

[[nodiscard]] nlohmann::json read_json_file(const std::filesystem::path& path);
[[nodiscard]] CatPtr load_category(const std::filesystem::path& path);

}  // namespace zcat
