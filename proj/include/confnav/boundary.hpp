#pragma once

#include <cstddef>
#include <vector>

#include "confnav/geometry.hpp"

namespace confnav {

/// Order of contact of the corner-flattening reparametrization. Reflex corners
/// need q = 5 for node images to keep their order at m = 512.
inline constexpr int kDefaultSmoothingExponent = 5;

/// Piecewise affine 2*pi-periodic parametrization of a polygon: vertex k sits
/// at s_k = k * 2*pi / n and edge k is traversed affinely over [s_k, s_{k+1}].
class BoundaryParametrization {
 public:
  explicit BoundaryParametrization(Polygon polygon, int smoothing_exponent = kDefaultSmoothingExponent);

  const Polygon& polygon() const noexcept { return polygon_; }
  std::size_t vertex_count() const noexcept { return polygon_.size(); }
  int smoothing_exponent() const noexcept { return q_; }
  double vertex_parameter(std::size_t k) const;

  /// Edge index containing s (s in [0, 2*pi]; s = 2*pi belongs to the last edge).
  std::size_t edge_of(double s) const;

  Complex curve(double s) const;
  /// One-sided derivative, taken on edge_of(s).
  Complex curve_derivative(double s) const;

 private:
  Polygon polygon_;
  int q_;
};

/// Grading function of [0, 2*pi] onto itself; order-q contact at both ends.
double sigma(double s, int q);
double sigma_derivative(double s, int q);

/// Reparametrization that keeps every s_k fixed and flattens the curve there.
double eta(double s, const BoundaryParametrization& param);
double eta_derivative(double s, const BoundaryParametrization& param);

/// gamma(eta(tau)) and its tau-derivative; vertex k is hit exactly at tau = s_k.
Complex smoothed_curve(const BoundaryParametrization& param, double tau);
Complex smoothed_derivative(const BoundaryParametrization& param, double tau);

/// Closed curve sampled at uniform parameters tau_j = j * 2*pi / m: positions
/// and d/dtau derivatives. Generic input of the integral-equation solver.
struct BoundaryNodes {
  std::vector<Complex> z;
  std::vector<Complex> dz;

  std::size_t size() const noexcept { return z.size(); }
  double step() const noexcept { return kTwoPi / static_cast<double>(z.size()); }
  double parameter(std::size_t j) const noexcept { return step() * static_cast<double>(j); }
};

/// Polygon boundary composed with the corner-flattening reparametrization.
class SmoothedBoundary {
 public:
  SmoothedBoundary(BoundaryParametrization param, std::size_t node_count);

  const BoundaryParametrization& parametrization() const noexcept { return param_; }
  const BoundaryNodes& nodes() const noexcept { return nodes_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }

  Complex curve(double tau) const;
  Complex derivative(double tau) const;

 private:
  BoundaryParametrization param_;
  BoundaryNodes nodes_;
};

/// Default node count max(256, 16 n), rounded up to even.
std::size_t default_node_count(std::size_t vertex_count);

BoundaryParametrization parametrize_polygon(const Polygon& p, int smoothing_exponent = kDefaultSmoothingExponent);
/// Throws InsufficientNodes unless m is even and m >= 4 n.
SmoothedBoundary smooth_boundary(const BoundaryParametrization& param, std::size_t m);

}  // namespace confnav
