#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "confnav/types.hpp"

namespace confnav {

enum class Orientation { CounterClockwise, Clockwise };

/// Closed polygon given by its vertices, without a repeated closing vertex.
class Polygon {
 public:
  /// Throws DegeneratePolygon for fewer than 3 vertices, non-finite
  /// coordinates, coincident consecutive vertices or zero area.
  explicit Polygon(std::vector<Complex> vertices);

  const std::vector<Complex>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  Complex vertex(std::size_t k) const { return vertices_[k % vertices_.size()]; }

  double signed_area() const;
  Orientation orientation() const;
  Polygon reversed() const;
  Polygon counterclockwise() const;

  double diameter() const;
  /// Crossing-number test; points on the boundary give an unspecified answer.
  bool contains(Complex q) const;
  double distance_to_boundary(Complex q) const;
  bool is_simple() const;

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  std::vector<Complex> vertices_;
};

double segment_distance(Complex q, Complex a, Complex b);
bool segments_intersect(Complex a, Complex b, Complex c, Complex d);

/// Interior angles alpha_k (units of pi) measured inside the enclosed region,
/// one per input vertex. Throws DegenerateAngle unless 0 < alpha_k < 2.
std::vector<double> interior_angles(const Polygon& p);

/// Open half-space {q : (q - anchor) . normal < 0} with outward unit normal.
class HalfSpace {
 public:
  HalfSpace(Complex anchor, Complex normal);
  Complex anchor() const noexcept { return anchor_; }
  Complex normal() const noexcept { return normal_; }

 private:
  Complex anchor_;
  Complex normal_;
};

double halfspace_value(Complex q, const HalfSpace& h);

/// Edge half-spaces of a convex polygon; the polygon interior is their intersection.
std::vector<HalfSpace> convex_halfspaces(const Polygon& p);

struct PolygonalWorkspace {
  Polygon outer;
  std::vector<Polygon> obstacles;
  Complex goal;
};

enum class Region { Interior, Boundary, Exterior };

/// Workspace whose invariants have been checked. All polygons are stored
/// counterclockwise; boundary_polygon() hands out the solver orientation.
class ValidatedWorkspace {
 public:
  const Polygon& outer() const noexcept { return outer_; }
  const std::vector<Polygon>& obstacles() const noexcept { return obstacles_; }
  std::size_t obstacle_count() const noexcept { return obstacles_.size(); }
  Complex goal() const noexcept { return goal_; }
  const std::vector<Complex>& vertices() const noexcept { return vertices_; }

  /// Boundary b (0 = outer, i = obstacle i) oriented with the free space on its
  /// left: counterclockwise outer, clockwise obstacles.
  Polygon boundary_polygon(std::size_t b) const;
  std::size_t boundary_count() const noexcept { return 1 + obstacles_.size(); }

  double bbox_diagonal() const noexcept { return bbox_diagonal_; }
  double boundary_tolerance() const noexcept { return 1e-9 * bbox_diagonal_; }
  double distance_to_boundary(Complex q) const;
  double distance_to_vertex(Complex q) const;

  PolygonalWorkspace raw() const { return {outer_, obstacles_, goal_}; }

  friend bool operator==(const ValidatedWorkspace&, const ValidatedWorkspace&) = default;

 private:
  friend ValidatedWorkspace validate_workspace(const PolygonalWorkspace& ws);
  ValidatedWorkspace(Polygon outer, std::vector<Polygon> obstacles, Complex goal);

  Polygon outer_;
  std::vector<Polygon> obstacles_;
  Complex goal_;
  std::vector<Complex> vertices_;
  double bbox_diagonal_ = 0.0;
};

ValidatedWorkspace validate_workspace(const PolygonalWorkspace& ws);
inline ValidatedWorkspace validate_workspace(const ValidatedWorkspace& ws) { return validate_workspace(ws.raw()); }

Region point_in_free_space(const ValidatedWorkspace& ws, Complex q);

}  // namespace confnav
