#pragma once

#include <vector>

#include <Eigen/Dense>

#include "confnav/boundary.hpp"
#include "confnav/execution.hpp"

namespace confnav {

enum class PieceKind { Bounded, Unbounded };

/// Discretized boundary relation G f = mu + c + i upsilon on one closed curve.
///
/// Unbounded problems are assembled on the curve inverted through the base
/// point, w = 1/(z - z_c); the inverted curve bounds a region containing w = 0
/// (the image of infinity) and is solved as a bounded problem with base 0.
struct RHSystem {
  PieceKind kind = PieceKind::Bounded;
  Complex base_point;    // z_c in the input plane
  Complex solve_base;    // z_c for bounded, 0 for unbounded
  BoundaryNodes nodes;   // solve-plane nodes
  Eigen::VectorXd mu;    // -log|node - solve_base|
  Eigen::MatrixXd R;     // Nystrom matrix of the Neumann-type kernel, R 1 = -1
  Eigen::MatrixXd H;     // Nystrom matrix of the conjugate kernel, H 1 = 0
};

/// Throws BasePointOnBoundary when z_c is within round-off of a node and
/// NonFiniteKernel when a kernel entry is not finite.
RHSystem assemble_system(const BoundaryNodes& nodes, Complex z_c, PieceKind kind,
                         Execution exec = Execution::Parallel);
inline RHSystem assemble_system(const SmoothedBoundary& b, Complex z_c, PieceKind kind,
                                Execution exec = Execution::Parallel) {
  return assemble_system(b.nodes(), z_c, kind, exec);
}

struct RHSolution {
  Eigen::VectorXd upsilon;
  double c = 0.0;
  double residual = 0.0;        // ||(I - R) upsilon + H mu||_inf
  double constant_spread = 0.0; // max deviation of the pointwise c estimate from its mean
};

/// Dense LU solve of (I - R) upsilon = -H mu; c = mean of [H upsilon - (I - R) mu] / 2.
/// Throws SingularSystem if the factorization is numerically singular.
RHSolution solve_rh(const RHSystem& sys);

/// One simply connected conformal map.
///
///  Bounded:   T(z) = e^{-c} (z - z_c) exp((z - z_c) f(z)), T(z_c) = 0, T'(z_c) = e^{-c} > 0,
///             boundary mapped onto the unit circle.
///  Unbounded: T(z) = (z - z_c) exp(-w f(w)) + z_c + f(0), w = 1/(z - z_c), so that
///             T(z) = z + O(1/z) at infinity; the hole boundary goes to the circle of
///             radius e^{-c} about z_c + f(0).
/// f is represented by its boundary values at the solve-plane nodes.
class ConformalMapPiece {
 public:
  ConformalMapPiece() = default;
  ConformalMapPiece(PieceKind kind, Complex base_point, double c, BoundaryNodes nodes, Eigen::VectorXd upsilon,
                    std::vector<Complex> f_values);

  PieceKind kind() const noexcept { return kind_; }
  Complex base_point() const noexcept { return base_point_; }
  double c() const noexcept { return c_; }
  const BoundaryNodes& nodes() const noexcept { return nodes_; }
  const Eigen::VectorXd& upsilon() const noexcept { return upsilon_; }
  const std::vector<Complex>& f_values() const noexcept { return f_; }

  /// Center and radius of the image circle.
  Complex image_center() const noexcept { return kind_ == PieceKind::Bounded ? Complex(0.0, 0.0) : shift_; }
  double image_radius() const noexcept { return kind_ == PieceKind::Bounded ? 1.0 : std::exp(-c_); }

  /// Images of the piece's own boundary nodes and their d/dtau derivatives,
  /// computed from the boundary correspondence (not by interior evaluation).
  BoundaryNodes boundary_image() const;

  Complex evaluate(Complex z) const;
  Complex derivative(Complex z) const;
  /// Value and derivative together (one pass over the nodes).
  std::pair<Complex, Complex> evaluate_with_derivative(Complex z) const;
  bool contains(Complex z) const;

  /// Corner points of the piece's boundary curve in the input plane, used for
  /// near-vertex reporting.
  void set_corners(std::vector<Complex> corners, double exclusion_radius);
  const std::vector<Complex>& corners() const noexcept { return corners_; }
  double exclusion_radius() const noexcept { return exclusion_radius_; }
  bool near_vertex(Complex z) const;

  friend bool operator==(const ConformalMapPiece& a, const ConformalMapPiece& b);

 private:
  Complex to_solve_plane(Complex z) const;
  struct Local {
    Complex f, df;
    double winding;
  };
  Local interpolate(Complex w, bool want_derivative) const;

  PieceKind kind_ = PieceKind::Bounded;
  Complex base_point_;
  double c_ = 0.0;
  BoundaryNodes nodes_;
  Eigen::VectorXd upsilon_;
  std::vector<Complex> f_;
  Complex shift_;
  std::vector<Complex> corners_;
  double exclusion_radius_ = 0.0;
};

ConformalMapPiece build_piece(const RHSystem& sys, const RHSolution& sol);
ConformalMapPiece solve_piece(const BoundaryNodes& nodes, Complex z_c, PieceKind kind,
                              Execution exec = Execution::Parallel);

enum class EvaluationStatus { Ok, NearVertex };

/// Throws PointOutsideDomain for points outside the piece's domain.
Complex evaluate_map(const ConformalMapPiece& piece, Complex z, EvaluationStatus* status = nullptr);
Complex map_derivative(const ConformalMapPiece& piece, Complex z, EvaluationStatus* status = nullptr);

/// Nodes of an analytic closed curve (used for smooth-boundary checks).
template <class Curve, class Derivative>
BoundaryNodes sample_curve(Curve&& curve, Derivative&& derivative, std::size_t m) {
  BoundaryNodes b;
  b.z.resize(m);
  b.dz.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(m);
    b.z[j] = curve(t);
    b.dz[j] = derivative(t);
  }
  return b;
}

}  // namespace confnav
