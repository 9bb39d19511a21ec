#pragma once

#include "confnav/koebe.hpp"
#include "confnav/types.hpp"

namespace confnav {

/// Koditschek-Rimon function on a sphere world:
///   phi(p) = |p - goal| / (|p - goal|^k + beta(p))^(1/k).
struct NavFunctionConfig {
  int k = 6;
  Complex goal_image{};
  SphereWorld world;
};

/// beta_0 * prod beta_i with beta_0 = 1 - |p|^2 and beta_i = |p - q_i|^2 - rho_i^2.
double beta_sphere(Complex p, const SphereWorld& sw);
Vec2 grad_beta_sphere(Complex p, const SphereWorld& sw);

/// Throws OutsideFreeSpace when beta is negative beyond rounding.
double phi_kr(Complex p, const NavFunctionConfig& cfg);
/// Zero at the goal, where phi has a cone-shaped minimum.
Vec2 grad_phi_kr(Complex p, const NavFunctionConfig& cfg);
std::pair<double, Vec2> phi_kr_with_gradient(Complex p, const NavFunctionConfig& cfg);

/// Real Jacobian of a conformal map from its complex derivative.
Mat2 jacobian_from_derivative(Complex d);
Mat2 jacobian(const PlanarMap& map, Complex x);

struct ControllerConfig {
  double gain = 1.0;
  NavFunctionConfig nav;
};

/// Closed-loop vector field u(x) = -K J_T(x)^T grad phi(T(x)) together with
/// the Lyapunov value V(x) = phi(T(x)).
class Controller {
 public:
  Controller(const PlanarMap& map, ControllerConfig cfg);

  struct Evaluation {
    Vec2 u;
    double value = 0.0;
  };
  Evaluation evaluate(Complex x) const;
  Vec2 control(Complex x) const { return evaluate(x).u; }
  /// Pulled-back navigation function phi(T(x)).
  double potential(Complex x) const;
  /// Gradient of phi(T(x)) with respect to x.
  Vec2 potential_gradient(Complex x) const;

  const PlanarMap& map() const noexcept { return *map_; }
  const ControllerConfig& config() const noexcept { return cfg_; }

 private:
  const PlanarMap* map_;
  ControllerConfig cfg_;
};

Vec2 control_input(Complex x, const Controller& controller);

}  // namespace confnav
