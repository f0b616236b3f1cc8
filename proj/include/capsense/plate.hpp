#pragma once

#include <functional>
#include <span>
#include <utility>

#include "capsense/geometry.hpp"
#include "capsense/material.hpp"

namespace capsense {

// The published small-deflection table carries two printed formulas (ellipse,
// rectangle) that do not reduce to their own symmetric limits. paper_exact
// reproduces the printed formulas verbatim; consistent replaces them with
// forms that do reduce correctly (see rectangle_coefficient).
enum class FormulaMode { paper_exact, consistent };

// Clamped diaphragm (non-cantilever shape) under uniform pressure.
struct PlateConfig {
    DiaphragmGeometry geometry;
    Material material;
    double built_in_stress = 0.0;  // Pa, tensile only

    PlateConfig(DiaphragmGeometry geometry, Material material, double built_in_stress = 0.0);

    double rigidity() const;  // plate D for this thickness
};

// Deflection over the lateral plane; w(x, y) is zero on and outside the
// clamped boundary and attains max_deflection at the centroid.
struct DeflectionField {
    std::function<double(double, double)> w;
    double max_deflection;
};

double max_deflection_small(const PlateConfig& config, double pressure,
                            FormulaMode mode = FormulaMode::consistent);

// W(r) = W0 (1 - (r/R)^2)^2, zero value and slope at r = R, 0 outside.
DeflectionField deflection_profile_circular(const PlateConfig& config, double w0);

// Separable clamped-plate-style profile for non-circular shapes; an assumed
// form, to be preferred only when an oracle field is unavailable.
DeflectionField assumed_profile(const DiaphragmGeometry& geometry, double w0);

// Implicit large-deflection solve for circular diaphragms:
//   W0 = [P R^4 / (64 D)] / (1 + 0.488 (W0/h)^2 + sigma h R^2 / (16 D))
double max_deflection_large(const PlateConfig& config, double pressure);

// Inverse of max_deflection_large in P at fixed config.
double touch_point_pressure(const PlateConfig& config, double target_depth);

// Calibrated max-deflection coefficients c(b/a) for clamped rectangles,
// W0 = c P b^4 / D with b the shorter side; interpolated from an
// FD-oracle-calibrated table over b/a in [0.1, 1], clamped outside.
double rectangle_coefficient(double side_ratio);
std::span<const std::pair<double, double>> rectangle_coefficient_table();

}  // namespace capsense
