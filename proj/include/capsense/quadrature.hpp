#pragma once

#include <array>
#include <functional>

#include "capsense/geometry.hpp"

namespace capsense {

// 32-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre32 {
    std::array<double, 32> nodes;
    std::array<double, 32> weights;
};

const GaussLegendre32& gauss_legendre_32();

struct QuadratureResult {
    double value;
    double error_estimate;  // |last refinement difference|
    int depth;              // refinement levels used
};

// Integral of f over an axis-aligned rectangle, tensor 32x32 Gauss-Legendre
// per panel, uniform panel subdivision until successive refinements agree to
// rel_tol; throws quadrature_error past max_depth.
QuadratureResult integrate_rectangle(const std::function<double(double, double)>& f, double x0,
                                     double x1, double y0, double y1, double rel_tol,
                                     int max_depth = 12);

// Integral of f(x, y) over the shape. Panels tile the shape exactly: polar map
// for circle/ellipse, centroid triangle fan for the polygons, plain rectangle
// for cantilever plan; integrands stay smooth so the tensor rule converges.
QuadratureResult integrate_shape(const Shape& shape, const std::function<double(double, double)>& f,
                                 double rel_tol, int max_depth = 12);

// 1-D adaptive Gauss-Legendre on [a, b].
QuadratureResult integrate_segment(const std::function<double(double)>& f, double a, double b,
                                   double rel_tol, int max_depth = 24);

}  // namespace capsense
