#include "capsense/plate.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "capsense/errors.hpp"

namespace capsense {

namespace {

constexpr int kMaxBisectionIterations = 200;
// the contract tolerance is 1e-10; converge further so capacitance curves
// built on these solves stay continuous to ~1e-12 through touch points
constexpr double kRelativeTolerance = 1e-14;

// Richardson-extrapolated FD oracle runs on clamped rectangles, short side b,
// W0 = c(b/a) P b^4 / D. Regenerate with fd_oracle::calibrate_rectangle_coefficients.
constexpr std::array<std::pair<double, double>, 10> kRectangleCoefficients = {{
    {0.1, 2.611189e-3},
    {0.2, 2.611188e-3},
    {0.3, 2.613198e-3},
    {0.4, 2.611634e-3},
    {0.5, 2.532955e-3},
    {0.6, 2.356859e-3},
    {0.7, 2.107495e-3},
    {0.8, 1.822083e-3},
    {0.9, 1.534052e-3},
    {1.0, 1.265315e-3},
}};

}  // namespace

PlateConfig::PlateConfig(DiaphragmGeometry geometry_in, Material material_in,
                         double built_in_stress_in)
    : geometry(std::move(geometry_in)),
      material(std::move(material_in)),
      built_in_stress(built_in_stress_in) {
    if (is_cantilever(geometry.shape))
        throw wrong_geometry_error("PlateConfig: cantilever geometry belongs to CantileverSpec");
    if (!(built_in_stress >= 0.0))
        throw std::invalid_argument("PlateConfig: built-in stress must be tensile (>= 0)");
}

double PlateConfig::rigidity() const {
    return flexural_rigidity(material, geometry.thickness);
}

double rectangle_coefficient(double side_ratio) {
    if (!(side_ratio > 0.0 && side_ratio <= 1.0))
        throw std::invalid_argument("rectangle_coefficient: side ratio must be in (0, 1]");
    const auto& table = kRectangleCoefficients;
    if (side_ratio <= table.front().first) return table.front().second;
    for (std::size_t i = 1; i < table.size(); ++i) {
        if (side_ratio <= table[i].first) {
            const auto [r0, c0] = table[i - 1];
            const auto [r1, c1] = table[i];
            const double t = (side_ratio - r0) / (r1 - r0);
            return c0 + t * (c1 - c0);
        }
    }
    return table.back().second;
}

std::span<const std::pair<double, double>> rectangle_coefficient_table() {
    return kRectangleCoefficients;
}

double max_deflection_small(const PlateConfig& config, double pressure, FormulaMode mode) {
    if (!(pressure >= 0.0))
        throw std::invalid_argument("max_deflection_small: pressure must be non-negative");
    const double d = config.rigidity();
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Circle>) {
                const double r = s.radius;
                return pressure * r * r * r * r / (64.0 * d);
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                const double a = s.semi_major, b = s.semi_minor;
                const double a2 = a * a, b2 = b * b;
                const double num = pressure * a2 * a2 * b2 * b2;
                if (mode == FormulaMode::paper_exact)
                    return num / (8.0 * d * (3.0 * (a2 + b2) + 2.0 * a2 * b2));
                return num / (8.0 * d * (3.0 * a2 * a2 + 2.0 * a2 * b2 + 3.0 * b2 * b2));
            } else if constexpr (std::is_same_v<T, Square>) {
                const double a = s.side;
                return 0.00133 * pressure * a * a * a * a / d;
            } else if constexpr (std::is_same_v<T, Pentagon>) {
                const double a = s.edge;
                return 0.0041 * pressure * a * a * a * a / d;
            } else if constexpr (std::is_same_v<T, Rectangle>) {
                const double a = s.side_a, b = s.side_b;
                if (mode == FormulaMode::paper_exact) {
                    const double a4 = a * a * a * a, b4 = b * b * b * b;
                    return 0.00133 * pressure * a4 * b4 /
                           (d * (7.0 * (a4 + b4) + 4.0 * a * a * b * b));
                }
                return rectangle_coefficient(b / a) * pressure * b * b * b * b / d;
            } else {
                throw wrong_geometry_error(
                    "max_deflection_small: cantilever has no clamped-plate formula");
            }
        },
        config.geometry.shape);
}

DeflectionField deflection_profile_circular(const PlateConfig& config, double w0) {
    if (!is_circle(config.geometry.shape))
        throw wrong_geometry_error("deflection_profile_circular: circular geometry required");
    if (!(w0 >= 0.0))
        throw std::invalid_argument("deflection_profile_circular: deflection must be >= 0");
    const double radius = std::get<Circle>(config.geometry.shape).radius;
    auto eval = [radius, w0](double x, double y) {
        const double r2 = (x * x + y * y) / (radius * radius);
        if (r2 >= 1.0) return 0.0;
        const double u = 1.0 - r2;
        return w0 * u * u;
    };
    return DeflectionField{std::move(eval), w0};
}

DeflectionField assumed_profile(const DiaphragmGeometry& geometry, double w0) {
    if (!(w0 >= 0.0))
        throw std::invalid_argument("assumed_profile: deflection must be >= 0");
    const Shape shape = geometry.shape;
    return std::visit(
        [&](const auto& s) -> DeflectionField {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Circle>) {
                const double radius = s.radius;
                return DeflectionField{[radius, w0](double x, double y) {
                                           const double r2 = (x * x + y * y) / (radius * radius);
                                           if (r2 >= 1.0) return 0.0;
                                           const double u = 1.0 - r2;
                                           return w0 * u * u;
                                       },
                                       w0};
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                const double a = s.semi_major, b = s.semi_minor;
                return DeflectionField{[a, b, w0](double x, double y) {
                                           const double u = 1.0 - (x / a) * (x / a) - (y / b) * (y / b);
                                           if (u <= 0.0) return 0.0;
                                           return w0 * u * u;
                                       },
                                       w0};
            } else if constexpr (std::is_same_v<T, Square> || std::is_same_v<T, Rectangle>) {
                double a, b;
                if constexpr (std::is_same_v<T, Square>) {
                    a = b = s.side;
                } else {
                    a = s.side_a;
                    b = s.side_b;
                }
                return DeflectionField{[a, b, w0](double x, double y) {
                                           const double u = 1.0 - (2.0 * x / a) * (2.0 * x / a);
                                           const double v = 1.0 - (2.0 * y / b) * (2.0 * y / b);
                                           if (u <= 0.0 || v <= 0.0) return 0.0;
                                           return w0 * u * u * v * v;
                                       },
                                       w0};
            } else if constexpr (std::is_same_v<T, Pentagon>) {
                // Radial analog: quartic in distance to the edge along the ray.
                const Shape pent = shape;
                return DeflectionField{[pent, w0](double x, double y) {
                                           if (!contains(pent, x, y)) return 0.0;
                                           const double r = std::hypot(x, y);
                                           if (r == 0.0) return w0;
                                           // bisect along the ray for the boundary distance
                                           double lo = 1.0, hi = 2.0;
                                           while (contains(pent, x * hi, y * hi) && hi < 1e6) {
                                               lo = hi;
                                               hi *= 2.0;
                                           }
                                           for (int i = 0; i < 60; ++i) {
                                               const double mid = 0.5 * (lo + hi);
                                               (contains(pent, x * mid, y * mid) ? lo : hi) = mid;
                                           }
                                           const double t = 1.0 / (0.5 * (lo + hi));  // r/r_edge
                                           const double u = 1.0 - t * t;
                                           return u <= 0.0 ? 0.0 : w0 * u * u;
                                       },
                                       w0};
            } else {
                throw wrong_geometry_error("assumed_profile: cantilever geometry unsupported");
            }
        },
        shape);
}

double max_deflection_large(const PlateConfig& config, double pressure) {
    if (!(pressure >= 0.0))
        throw std::invalid_argument("max_deflection_large: pressure must be non-negative");
    if (!is_circle(config.geometry.shape))
        throw wrong_geometry_error("max_deflection_large: circular geometry required");
    if (pressure == 0.0) return 0.0;

    const double radius = std::get<Circle>(config.geometry.shape).radius;
    const double h = config.geometry.thickness;
    const double d = config.rigidity();
    const double linear = pressure * radius * radius * radius * radius / (64.0 * d);
    const double stress_term = config.built_in_stress * h * radius * radius / (16.0 * d);

    // W0 (1 + 0.488 (W0/h)^2 + stress_term) = linear; LHS strictly increasing.
    auto residual = [&](double w0) {
        const double k = w0 / h;
        return w0 * (1.0 + 0.488 * k * k + stress_term) - linear;
    };
    double lo = 0.0;
    double hi = linear / (1.0 + stress_term);
    if (residual(hi) < 0.0) hi = linear;  // guard against rounding at the bracket edge
    for (int i = 0; i < kMaxBisectionIterations; ++i) {
        const double mid = 0.5 * (lo + hi);
        (residual(mid) < 0.0 ? lo : hi) = mid;
        if (hi - lo <= kRelativeTolerance * hi) return 0.5 * (lo + hi);
    }
    std::ostringstream msg;
    msg << "max_deflection_large: bisection failed to reach tolerance " << kRelativeTolerance
        << " after " << kMaxBisectionIterations << " iterations (bracket [" << lo << ", " << hi
        << "], P = " << pressure << ")";
    throw numerical_error(msg.str());
}

double touch_point_pressure(const PlateConfig& config, double target_depth) {
    if (!(target_depth > 0.0))
        throw std::invalid_argument("touch_point_pressure: target depth must be positive");
    if (!is_circle(config.geometry.shape))
        throw wrong_geometry_error("touch_point_pressure: circular geometry required");

    const double radius = std::get<Circle>(config.geometry.shape).radius;
    const double d = config.rigidity();
    // Small-deflection inversion seeds the bracket; expand until it covers.
    double hi = 64.0 * d * target_depth / (radius * radius * radius * radius);
    if (!(hi > 0.0)) hi = 1.0;
    while (max_deflection_large(config, hi) < target_depth) hi *= 2.0;
    double lo = 0.0;
    for (int i = 0; i < kMaxBisectionIterations; ++i) {
        const double mid = 0.5 * (lo + hi);
        (max_deflection_large(config, mid) < target_depth ? lo : hi) = mid;
        if (hi - lo <= kRelativeTolerance * hi) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace capsense
