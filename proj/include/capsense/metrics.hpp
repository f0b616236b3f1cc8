#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <utility>

#include "capsense/cp_curve.hpp"

namespace capsense {

struct LinearFit {
    double slope;
    double intercept;
    double r_squared;  // in [0, 1]; 0 for zero-variance targets
    double p_lo;       // fitted window
    double p_hi;
};

// Ordinary least squares over (x, y) points; exact on collinear input.
LinearFit linear_fit(std::span<const std::pair<double, double>> points);

// OLS slope of the curve restricted to [p_lo, p_hi].
double sensitivity(const CPCurve& curve, double p_lo, double p_hi);

// Full-scale independent nonlinearity: the best straight line in the minimax
// sense, max |C - line| / (C_max - C_min) over the window. (An OLS reference
// line would give 1/6 instead of the textbook 1/8 on a quadratic.)
double nonlinearity(const CPCurve& curve, double p_lo, double p_hi);

// Maximal contiguous sample window whose OLS fit reaches r2_min; equivalent to
// exhaustive search over all windows, ties broken toward lower p_lo. Empty
// when no 3-point window qualifies.
std::optional<LinearFit> widest_linear_window(const CPCurve& curve, double r2_min = 0.999);

// Measurement ingestion: CSV with header "pressure_pa,capacitance_f".
CPCurve read_curve_csv(std::istream& in);

}  // namespace capsense
