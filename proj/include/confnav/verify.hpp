#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "confnav/navfield.hpp"

namespace confnav {

/// Seeded uniform samples of the free space at least min_clearance from its boundary.
std::vector<Complex> sample_free_space(const ValidatedWorkspace& ws, std::size_t n, std::uint64_t seed,
                                       double min_clearance = 0.0);

/// Largest Cauchy-Riemann defect |u_x - v_y| + |u_y + v_x| relative to |T'|,
/// from central differences with step h.
double conformality_residual(const PlanarMap& map, std::span<const Complex> points, double h);

/// Largest distance of a tracked boundary image from its circle.
double boundary_circularity(const WorkspaceSolution& sol);

/// Largest |sum(1 - alpha_k) - 2| over all workspace polygons (counterclockwise).
double angle_identity_error(const ValidatedWorkspace& ws);

struct JacobianCheck {
  double determinant_error = 0.0;  // |det J - |T'|^2|
  double conformal_error = 0.0;    // ||J^T J - det(J) I||
};
JacobianCheck jacobian_identities(const PlanarMap& map, std::span<const Complex> points);

/// Largest |phi(T(x)) - 1| over n seeded boundary samples.
double boundary_potential_error(const BoundaryCauchyMap& map, const NavFunctionConfig& nav, std::size_t n,
                                std::uint64_t seed);

/// Largest |T_cache(x) - T_composed(x)| over the points.
double composition_gap(const WorkspaceSolution& sol, std::span<const Complex> points);

struct GridScan {
  double spacing = 0.0;
  std::size_t evaluated = 0;
  std::vector<Complex> minima;  // grid points lower than every free neighbour
};
/// Pulled-back potential on a regular grid over the outer bounding box.
GridScan grid_minima(const Controller& controller, const ValidatedWorkspace& ws, double spacing,
                     Execution exec = Execution::Parallel);

}  // namespace confnav
