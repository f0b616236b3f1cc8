#include "capsense/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace capsense {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0)) throw std::invalid_argument(std::string("geometry: ") + what + " must be positive");
}

// Circumradius of a regular pentagon with edge a.
double pentagon_circumradius(double edge) {
    return edge / (2.0 * std::sin(std::numbers::pi / 5.0));
}

}  // namespace

Shape make_shape(Shape shape) {
    std::visit(
        [](auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Circle>) {
                require_positive(s.radius, "circle radius");
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                require_positive(s.semi_major, "ellipse semi-major axis");
                require_positive(s.semi_minor, "ellipse semi-minor axis");
                if (s.semi_major < s.semi_minor) std::swap(s.semi_major, s.semi_minor);
            } else if constexpr (std::is_same_v<T, Square>) {
                require_positive(s.side, "square side");
            } else if constexpr (std::is_same_v<T, Rectangle>) {
                require_positive(s.side_a, "rectangle side");
                require_positive(s.side_b, "rectangle side");
                if (s.side_a < s.side_b) std::swap(s.side_a, s.side_b);
            } else if constexpr (std::is_same_v<T, Pentagon>) {
                require_positive(s.edge, "pentagon edge");
            } else if constexpr (std::is_same_v<T, Cantilever>) {
                require_positive(s.length, "cantilever length");
                require_positive(s.width, "cantilever width");
            }
        },
        shape);
    return shape;
}

DiaphragmGeometry::DiaphragmGeometry(Shape shape_in, double thickness_in)
    : shape(make_shape(std::move(shape_in))), thickness(thickness_in) {
    require_positive(thickness, "thickness");
}

double surface_area(const Shape& shape) {
    return std::visit(
        [](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Circle>) {
                return std::numbers::pi * s.radius * s.radius;
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                return std::numbers::pi * s.semi_major * s.semi_minor;
            } else if constexpr (std::is_same_v<T, Square>) {
                return s.side * s.side;
            } else if constexpr (std::is_same_v<T, Rectangle>) {
                return s.side_a * s.side_b;
            } else if constexpr (std::is_same_v<T, Pentagon>) {
                // (1/4) sqrt(5 (5 + 2 sqrt 5)) a^2
                return 0.25 * std::sqrt(5.0 * (5.0 + 2.0 * std::sqrt(5.0))) * s.edge * s.edge;
            } else {
                return s.length * s.width;
            }
        },
        shape);
}

double surface_area(const DiaphragmGeometry& geometry) { return surface_area(geometry.shape); }

std::array<std::array<double, 2>, 5> pentagon_vertices(double edge) {
    const double rc = pentagon_circumradius(edge);
    std::array<std::array<double, 2>, 5> v{};
    for (int k = 0; k < 5; ++k) {
        const double theta = std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * k / 5.0;
        v[k] = {rc * std::cos(theta), rc * std::sin(theta)};
    }
    return v;
}

bool contains(const Shape& shape, double x, double y) {
    return std::visit(
        [x, y](const auto& s) -> bool {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Circle>) {
                return x * x + y * y < s.radius * s.radius;
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                const double u = x / s.semi_major;
                const double v = y / s.semi_minor;
                return u * u + v * v < 1.0;
            } else if constexpr (std::is_same_v<T, Square>) {
                return std::abs(x) < 0.5 * s.side && std::abs(y) < 0.5 * s.side;
            } else if constexpr (std::is_same_v<T, Rectangle>) {
                return std::abs(x) < 0.5 * s.side_a && std::abs(y) < 0.5 * s.side_b;
            } else if constexpr (std::is_same_v<T, Pentagon>) {
                const auto verts = pentagon_vertices(s.edge);
                bool inside = false;
                for (int i = 0, j = 4; i < 5; j = i++) {
                    const double xi = verts[i][0], yi = verts[i][1];
                    const double xj = verts[j][0], yj = verts[j][1];
                    if ((yi > y) != (yj > y) && x < (xj - xi) * (y - yi) / (yj - yi) + xi)
                        inside = !inside;
                }
                return inside;
            } else {
                return x > 0.0 && x < s.length && std::abs(y) < 0.5 * s.width;
            }
        },
        shape);
}

std::array<double, 2> half_extents(const Shape& shape) {
    return std::visit(
        [](const auto& s) -> std::array<double, 2> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Circle>) {
                return {s.radius, s.radius};
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                return {s.semi_major, s.semi_minor};
            } else if constexpr (std::is_same_v<T, Square>) {
                return {0.5 * s.side, 0.5 * s.side};
            } else if constexpr (std::is_same_v<T, Rectangle>) {
                return {0.5 * s.side_a, 0.5 * s.side_b};
            } else if constexpr (std::is_same_v<T, Pentagon>) {
                const auto verts = pentagon_vertices(s.edge);
                double hx = 0.0, hy = 0.0;
                for (const auto& v : verts) {
                    hx = std::max(hx, std::abs(v[0]));
                    hy = std::max(hy, std::abs(v[1]));
                }
                return {hx, hy};
            } else {
                return {0.5 * s.length, 0.5 * s.width};
            }
        },
        shape);
}

std::string shape_name(const Shape& shape) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Circle>) return "circle";
            else if constexpr (std::is_same_v<T, Ellipse>) return "ellipse";
            else if constexpr (std::is_same_v<T, Square>) return "square";
            else if constexpr (std::is_same_v<T, Rectangle>) return "rectangle";
            else if constexpr (std::is_same_v<T, Pentagon>) return "pentagon";
            else { (void)s; return "cantilever"; }
        },
        shape);
}

bool is_circle(const Shape& shape) { return std::holds_alternative<Circle>(shape); }
bool is_cantilever(const Shape& shape) { return std::holds_alternative<Cantilever>(shape); }

}  // namespace capsense
