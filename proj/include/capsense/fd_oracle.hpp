#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "capsense/cantilever.hpp"
#include "capsense/capacitance.hpp"
#include "capsense/geometry.hpp"

namespace capsense::fd {

// Uniform lattice over a clamped plate, centered on the centroid. Nodes whose
// half-spacing neighborhood crosses the boundary are treated as outside; the
// clamped condition is imposed through ghost values anchored at the true wall
// crossing along each stencil leg.
struct GridPlate {
    Shape shape;
    double spacing;   // m
    double rigidity;  // N m
    double load;      // Pa

    int mx, my;                 // lattice index ranges [-mx, mx] x [-my, my]
    std::vector<int32_t> node;  // interior index or -1, row-major over the lattice
    int interior_count = 0;

    GridPlate(Shape shape, double spacing, double rigidity, double load);

    // spacing chosen so the larger bounding-box dimension spans nodes_across nodes
    static GridPlate with_nodes_across(const Shape& shape, int nodes_across, double rigidity,
                                       double load);

    bool interior(int i, int j) const;
    int interior_index(int i, int j) const;
    double x_of(int i) const { return i * spacing; }
    double y_of(int j) const { return j * spacing; }
};

struct FieldSolution {
    Shape shape;
    double spacing;
    int mx, my;
    std::vector<double> w;  // full lattice, zero outside the mask
    double residual;        // relative |A w - b| / |b|
    int iterations;
    double max_w;
    double max_x, max_y;

    double value_at(double x, double y) const;  // bilinear, 0 outside lattice

    // Sum of integrand(w, x, y) over lattice cells inside the shape, 4x4
    // Gauss-Legendre on each bilinear patch, plus boundary-sliver area times
    // integrand(0) where the lattice does not cover the shape.
    double integrate(const std::function<double(double, double, double)>& integrand) const;
};

// Discrete biharmonic solve D lap^2 W = P with clamped edges.
FieldSolution solve_plate(const GridPlate& grid);

double max_deflection(const FieldSolution& solution);

struct ConvergencePoint {
    double spacing;
    double max_w;
};

struct ConvergenceStudy {
    std::vector<ConvergencePoint> points;
    double observed_order;  // Richardson estimate from the last three points
    double extrapolated;    // spacing -> 0 limit of max_w
};

// Runs solve_plate over >= 3 spacings in geometric progression (given as
// nodes-across counts, e.g. {65, 129, 257}).
ConvergenceStudy convergence_study(const Shape& shape, double rigidity, double load,
                                   std::span<const int> nodes_across);

// Clamped-free Euler-Bernoulli beam, D W'''' = q; returns tip deflection.
double solve_beam(const CantileverSpec& spec, double load_per_length, int n_nodes);

// Field factory for capacitance pipelines: solves the unit-load plate once per
// geometry and rescales the profile to the requested center deflection.
FieldFactory oracle_field_factory(int nodes_across);

// Normal-mode C(P) with oracle deflection profiles for non-circular shapes
// (circle still uses the closed form). Grid-cell integration keeps the
// capacitance quadrature consistent with the field resolution.
CPCurve capacitance_pressure_curve_oracle(const PlateConfig& plate, const SensorStack& stack,
                                          std::span<const double> pressures,
                                          FormulaMode mode = FormulaMode::consistent,
                                          int nodes_across = 129);

// Max-deflection coefficients c(b/a) with W0 = c P b^4 / D for clamped
// rectangles, Richardson-extrapolated; regenerates the table frozen in
// plate_statics.
std::vector<std::pair<double, double>> calibrate_rectangle_coefficients(
    std::span<const double> ratios, std::span<const int> nodes_across);

void write_field_csv(const FieldSolution& solution, std::ostream& out);
void write_summary_json(const FieldSolution& solution, std::ostream& out);

}  // namespace capsense::fd
