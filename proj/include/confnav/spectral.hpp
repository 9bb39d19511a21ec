#pragma once

#include <span>
#include <vector>

#include "confnav/types.hpp"

namespace confnav {

/// Derivative of the trigonometric interpolant of v at the uniform nodes
/// j * 2*pi / m (m even).
std::vector<double> periodic_derivative(std::span<const double> v);

/// Barycentric trigonometric interpolation at parameter tau (m even).
double trig_interpolate(std::span<const double> v, double tau);
Complex trig_interpolate(std::span<const Complex> v, double tau);

/// Barycentric Cauchy interpolation over closed curves. Nodes carry d/dtau
/// tangents; the trapezoidal weight cancels between numerator and
/// denominator, which keeps the formula accurate near the boundary.
struct CauchySum {
  Complex numerator{};
  Complex denominator{};
  Complex derivative_numerator{};
  Complex derivative_denominator{};
  int hit = -1;  // node index when z coincides with a node
};

void accumulate_cauchy(CauchySum& acc, std::span<const Complex> nodes, std::span<const Complex> tangents,
                       std::span<const Complex> values, Complex z, int offset = 0);

/// Winding number of the node curves around z estimated from the quadrature.
inline double cauchy_winding(const CauchySum& acc, double step) {
  return (acc.denominator * step / Complex(0.0, kTwoPi)).real();
}

}  // namespace confnav
