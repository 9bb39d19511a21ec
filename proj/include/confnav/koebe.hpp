#pragma once

#include <functional>
#include <span>
#include <vector>

#include "confnav/geometry.hpp"
#include "confnav/rhsolver.hpp"

namespace confnav {

/// Anything that maps workspace points to sphere-world points conformally.
class PlanarMap {
 public:
  virtual ~PlanarMap() = default;
  /// T(z) and the complex derivative T'(z).
  virtual std::pair<Complex, Complex> evaluate_with_derivative(Complex z) const = 0;
  virtual Complex evaluate(Complex z) const { return evaluate_with_derivative(z).first; }
  Complex derivative(Complex z) const { return evaluate_with_derivative(z).second; }
};

struct Circle {
  Complex center;
  double radius = 0.0;
  friend bool operator==(const Circle&, const Circle&) = default;
};

/// Unit disk with M disjoint circular holes.
struct SphereWorld {
  std::vector<Circle> obstacles;

  /// Smallest gap between any two boundary circles (outer included);
  /// negative when circles overlap or leave the unit disk.
  double margin() const;
  bool is_valid(double min_margin = 0.0) const;
};

struct CircleFit {
  Complex center;
  double radius = 0.0;
  double max_deviation = 0.0;
};

/// Least-squares circle through the points. Throws CollinearPoints.
CircleFit circle_residual(std::span<const Complex> points);

/// Sequential composition of simply connected pieces, first piece applied first.
class ComposedMap : public PlanarMap {
 public:
  ComposedMap() = default;
  explicit ComposedMap(std::vector<ConformalMapPiece> pieces) : pieces_(std::move(pieces)) {}

  const std::vector<ConformalMapPiece>& pieces() const noexcept { return pieces_; }
  void append(ConformalMapPiece piece) { pieces_.push_back(std::move(piece)); }

  std::pair<Complex, Complex> evaluate_with_derivative(Complex z) const override;
  Complex evaluate(Complex z) const override;

  int iterations = 0;
  double residual = 0.0;
  std::vector<double> residual_history;
  std::vector<double> circle_deviation_history;

 private:
  std::vector<ConformalMapPiece> pieces_;
};

/// The composed map represented through its boundary values: a barycentric
/// Cauchy integral over all original boundary nodes. Used for repeated
/// evaluation (trajectories, grids) instead of replaying the composition.
class BoundaryCauchyMap : public PlanarMap {
 public:
  struct Boundary {
    BoundaryParametrization param;  // polygon oriented with the free space on its left
    BoundaryNodes nodes;            // smoothed boundary nodes
    std::vector<Complex> images;    // T at the nodes
    Circle circle;                  // image circle (unit circle for b = 0)
  };

  BoundaryCauchyMap() = default;
  explicit BoundaryCauchyMap(std::vector<Boundary> boundaries);

  const std::vector<Boundary>& boundaries() const noexcept { return boundaries_; }

  std::pair<Complex, Complex> evaluate_with_derivative(Complex z) const override;
  Complex evaluate(Complex z) const override;
  /// Quadrature estimate of the winding number; ~1 inside the free space.
  double winding(Complex z) const;

  /// T at boundary b, parameter tau, through the boundary correspondence:
  /// the image angle is interpolated so the result lies on the image circle.
  Complex evaluate_boundary(std::size_t b, double tau) const;
  /// Workspace point gamma_hat_b(tau).
  Complex boundary_point(std::size_t b, double tau) const;

 private:
  std::vector<Boundary> boundaries_;
  std::vector<Complex> all_nodes_, all_weights_, all_images_;
  std::vector<std::vector<double>> angle_periodic_;
  std::vector<double> angle_slope_;
};

struct KoebeConfig {
  std::size_t nodes = 0;  // per boundary; 0 selects default_node_count
  int smoothing_exponent = kDefaultSmoothingExponent;
  double tol = 1e-12;
  int max_iterations = 50;
  bool strict_monotone = false;
  Execution exec = Execution::Parallel;
  std::function<void(int iteration, double residual)> on_iteration;
  std::function<void(const RHSystem&, const RHSolution&, int iteration, std::size_t boundary)> on_solve;
};

struct WorkspaceSolution {
  ComposedMap map;
  SphereWorld sphere_world;
  BoundaryCauchyMap boundary_map;
};

/// Round-robin iteration: each obstacle image is mapped to a circle by an
/// unbounded solve, then the outer image to the unit disk by a bounded solve
/// with the goal image as base point. Stops when the sup-norm displacement of
/// all boundary nodes over one round drops below cfg.tol.
/// Throws MaxIterationsExceeded or DegenerateObstacleImage.
WorkspaceSolution solve_workspace(const ValidatedWorkspace& ws, const KoebeConfig& cfg = {});

/// Point well inside a closed node curve (largest clearance on a grid, refined).
Complex interior_point(std::span<const Complex> curve);

}  // namespace confnav
