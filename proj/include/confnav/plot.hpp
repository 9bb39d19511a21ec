#pragma once

#include <functional>
#include <string>
#include <vector>

#include "confnav/types.hpp"

namespace confnav {

/// Scalar samples on a regular grid; NaN marks points outside the domain.
struct ScalarGrid {
  double x0 = 0.0, y0 = 0.0, dx = 1.0, dy = 1.0;
  int nx = 0, ny = 0;
  std::vector<double> values;  // row-major, index j * nx + i

  double at(int i, int j) const { return values[static_cast<std::size_t>(j) * nx + i]; }
  Complex point(int i, int j) const { return {x0 + i * dx, y0 + j * dy}; }
};

ScalarGrid sample_grid(Complex lower, Complex upper, int nx, int ny, const std::function<double(Complex)>& f);

struct Segment {
  Complex a, b;
};

/// Level-set segments by marching squares; cells touching a NaN are skipped
/// and saddle cells are split using the cell-centre average.
std::vector<Segment> marching_squares(const ScalarGrid& grid, double level);

/// Minimal SVG writer in data coordinates (y up).
class SvgCanvas {
 public:
  SvgCanvas(Complex lower, Complex upper, double width_px = 600.0, double margin_px = 20.0);

  void polygon(const std::vector<Complex>& pts, const std::string& fill, const std::string& stroke);
  void polyline(const std::vector<Complex>& pts, const std::string& stroke, double width = 1.5);
  void circle(Complex c, double r, const std::string& fill, const std::string& stroke);
  void segments(const std::vector<Segment>& segs, const std::string& stroke, double width = 0.8);
  void marker(Complex p, const std::string& fill, double radius_px = 4.0);
  void text(Complex p, const std::string& s, double size_px = 12.0);

  std::string str() const;

 private:
  double px(double x) const;
  double py(double y) const;

  Complex lower_, upper_;
  double scale_, margin_, width_, height_;
  std::string body_;
};

/// Evenly spaced colour for curve i out of n.
std::string palette(std::size_t i);

}  // namespace confnav
