#pragma once

#include <functional>
#include <string>
#include <vector>

#include "raux/complexutil.hpp"

namespace raux::xray {

struct GridSpec {
  double x_min = -10.0, x_max = 10.0;
  double y_min = -10.0, y_max = 10.0;
  int nx = 400, ny = 400;

  void validate() const;
  double dx() const { return (x_max - x_min) / (nx - 1); }
  double dy() const { return (y_max - y_min) / (ny - 1); }
  Complex point(int ix, int iy) const {
    return {x_min + ix * dx(), y_min + iy * dy()};
  }
};

// Row-major field of samples; cells that failed to evaluate hold NaN and are
// listed in failed_cells.
struct Field {
  GridSpec grid;
  std::vector<Complex> values;  // size nx*ny, index iy*nx+ix
  std::vector<int> failed_cells;
  const Complex& at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * grid.nx + ix]; }
};

using Polyline = std::vector<Complex>;

struct XRayCurves {
  std::vector<Polyline> re_zero;
  std::vector<Polyline> im_zero;
  std::vector<Complex> zeros;
};

// Deterministic concurrent evaluation over grid rows.
Field grid_eval(const std::function<Complex(const Complex&)>& fn,
                const GridSpec& grid);

// Marching squares with linear interpolation on the Re and Im sign fields;
// saddle cells tie-break on the corner-average midpoint sample. Where both a
// Re and an Im segment cross one cell and fn is supplied, the crossing is
// refined by 2-D bisection (quadrant descent, <= 60 steps) until |f| < 1e-8
// and reported in zeros.
XRayCurves extract_zero_curves(
    const Field& field,
    const std::function<Complex(const Complex&)>& fn = nullptr);

enum class RenderFormat { svg, ppm, csv };

// SVG 1.1 (two stroke classes plus zero dots), binary PPM (P6), or CSV with a
// header and one row per vertex. Output is byte-deterministic.
std::string render(const XRayCurves& curves, const GridSpec& grid,
                   RenderFormat format);

// Named registry used by the CLI: "F" (the entire kernel) and "R"
// (the auxiliary function through the half-plane router, tolerance 1e-8).
std::function<Complex(const Complex&)> registered_function(const std::string& name);

}  // namespace raux::xray
