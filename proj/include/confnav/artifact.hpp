#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "confnav/koebe.hpp"

namespace confnav {

/// Everything needed to evaluate a solved map without re-solving: the
/// workspace, the solver settings and both map representations.
struct MapArtifact {
  ValidatedWorkspace workspace;
  std::size_t nodes = 0;
  int smoothing_exponent = kDefaultSmoothingExponent;
  double tol = 1e-12;
  WorkspaceSolution solution;
};

nlohmann::json map_to_json(const MapArtifact& artifact);
/// Throws ArtifactCorrupt for anything that is not a complete map document.
MapArtifact map_from_json(const nlohmann::json& doc);

void save_map(const std::filesystem::path& path, const MapArtifact& artifact);
/// Throws MissingMapArtifact when the file does not exist.
MapArtifact load_map(const std::filesystem::path& path);

/// {iterations, residual, circles: [{center: [x, y], radius}]}
nlohmann::json map_summary(const WorkspaceSolution& solution);

/// One row per boundary node: boundary,j,tau,x,y,wx,wy (workspace point and image).
std::string boundary_images_csv(const WorkspaceSolution& solution);

}  // namespace confnav
