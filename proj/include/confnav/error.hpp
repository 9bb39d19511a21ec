#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace confnav {

enum class ErrorKind {
  SelfIntersectingPolygon,
  DegeneratePolygon,
  OverlappingObstacles,
  GoalOutsideFreeSpace,
  GoalOnVertex,
  DegenerateAngle,
  DomainError,
  InsufficientNodes,
  BasePointOnBoundary,
  NonFiniteKernel,
  SingularSystem,
  PointOutsideDomain,
  MaxIterationsExceeded,
  DegenerateObstacleImage,
  CollinearPoints,
  OutsideFreeSpace,
  InvalidStart,
  NumericalFailure,
  ParseError,
  InvalidManifest,
  MissingMapArtifact,
  ArtifactCorrupt,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// True for errors caused by bad input files or arguments (CLI exit code 2).
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace confnav
