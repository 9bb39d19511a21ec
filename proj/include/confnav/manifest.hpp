#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include "confnav/koebe.hpp"
#include "confnav/simulator.hpp"

namespace confnav {

/// Batch-run description. Relative paths resolve against the manifest's directory.
struct RunManifest {
  std::filesystem::path workspace;
  std::filesystem::path output_dir = "out";
  std::uint64_t seed = 0;

  std::size_t nodes = 0;  // 0 selects the default per boundary
  int smoothing_exponent = kDefaultSmoothingExponent;
  double tol = 1e-12;
  int max_iterations = 50;

  int k = 6;
  double gain = 1.0;

  SimulationConfig simulation;
  std::vector<Complex> starts;

  int verify_points = 1000;  // random interior probes for the invariant report
  int grid_points = 200;     // grid scan resolution per axis for the minimum check

  KoebeConfig koebe_config() const;
  ControllerConfig controller_config(const WorkspaceSolution& sol, Complex goal_image) const;
};

/// Throws ParseError for malformed JSON and InvalidManifest for a wrong shape.
/// Ranges are left to check_manifest so command-line overrides can be applied first.
RunManifest parse_manifest(std::string_view text, const std::filesystem::path& base_dir);
RunManifest load_manifest(const std::filesystem::path& path);
/// Throws InvalidManifest for settings out of range or a missing workspace file.
void check_manifest(const RunManifest& m);

}  // namespace confnav
