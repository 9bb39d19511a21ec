#pragma once

#include <optional>
#include <string>
#include <vector>

#include "confnav/error.hpp"
#include "confnav/execution.hpp"
#include "confnav/geometry.hpp"
#include "confnav/navfield.hpp"

namespace confnav {

struct SimulationConfig {
  double dt = 1e-3;           // seconds
  double max_time = 200.0;    // seconds
  double goal_radius = 1e-3;  // meters
};

enum class Outcome { Converged, Timeout, CollisionDetected, NumericalFailure };
std::string_view to_string(Outcome outcome);

struct Sample {
  double t = 0.0;
  Complex x;
  Vec2 u = Vec2::Zero();
  double V = 0.0;
};

struct Trajectory {
  std::vector<Sample> samples;
  Outcome outcome = Outcome::Timeout;
  int near_vertex_steps = 0;
  std::string message;
};

/// Classical RK4 on dx/dt = u(x) with fixed step dt. When one step at the
/// current speed could enter the goal ball, a final straight step of length
/// |x - goal| along u lands on the goal.
/// Throws InvalidStart when x0 is not in the open free space.
Trajectory integrate(Complex x0, const Controller& controller, const ValidatedWorkspace& ws,
                     const SimulationConfig& sc = {});

struct LyapunovReport {
  double max_increase = 0.0;
  std::size_t worst_sample = 0;
  bool passed = true;
};
LyapunovReport lyapunov_check(const Trajectory& traj, double allowance = 1e-6);

/// Smallest distance from a trajectory sample to the free-space boundary.
double clearance(const Trajectory& traj, const ValidatedWorkspace& ws);

struct TrajectoryResult {
  Complex start;
  std::optional<Trajectory> trajectory;
  std::optional<Error> error;
};

/// Independent trajectories; one failing start does not affect the others.
std::vector<TrajectoryResult> integrate_batch(std::span<const Complex> starts, const Controller& controller,
                                              const ValidatedWorkspace& ws, const SimulationConfig& sc,
                                              Execution exec = Execution::Parallel);

/// CSV with header "t,x,y,ux,uy,V" and 17 significant digits.
std::string trajectory_csv(const Trajectory& traj);

}  // namespace confnav
