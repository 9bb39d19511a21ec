#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "confnav/geometry.hpp"

namespace confnav {

/// Workspace document {"outer": [[x,y],...], "obstacles": [[[x,y],...],...], "goal": [x,y]}.
/// Throws ParseError for malformed JSON or a wrong shape; geometric validity is
/// left to validate_workspace.
PolygonalWorkspace parse_workspace(std::string_view text);
PolygonalWorkspace workspace_from_json(const nlohmann::json& doc);
nlohmann::json workspace_to_json(const PolygonalWorkspace& ws);

PolygonalWorkspace load_workspace(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

nlohmann::json point_to_json(Complex p);
Complex point_from_json(const nlohmann::json& j);

}  // namespace confnav
