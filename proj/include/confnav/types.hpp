#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Core>

namespace confnav {

/// Planar points are complex numbers x + iy throughout the library.
using Complex = std::complex<double>;
using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline Vec2 to_vec(Complex z) { return {z.real(), z.imag()}; }
inline Complex to_complex(const Vec2& v) { return {v.x(), v.y()}; }

inline double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }
inline double dot(Complex a, Complex b) { return a.real() * b.real() + a.imag() * b.imag(); }

}  // namespace confnav
