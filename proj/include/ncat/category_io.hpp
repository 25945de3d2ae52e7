#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ncat/category.hpp"

namespace ncat {

/// Parses the JSON category format. Missing identities are generated as
/// `id:<cell>` and composites forced by the structure are filled in; the
/// axioms are not checked here (see validate()).
StrictNCategory parse_category(std::string_view text);
StrictNCategory parse_category(const nlohmann::json& doc);
inline StrictNCategory parse_category(const char* text) {
  return parse_category(std::string_view(text));
}
inline StrictNCategory parse_category(const std::string& text) {
  return parse_category(std::string_view(text));
}
StrictNCategory load_category(const std::filesystem::path& path);

/// Full dump: every cell, identity and tabulated composite, in a stable order.
nlohmann::json to_json(const StrictNCategory& c);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace ncat
