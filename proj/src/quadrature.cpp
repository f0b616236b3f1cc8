#include "capsense/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "capsense/errors.hpp"

namespace capsense {

namespace {

// Legendre P_n(x) and its derivative by the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
    double p1 = 1.0, p2 = 0.0;
    for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * x * p2 - j * p3) / (j + 1.0);
    }
    return {p1, n * (x * p1 - p2) / (x * x - 1.0)};
}

GaussLegendre32 compute_rule() {
    GaussLegendre32 rule{};
    constexpr int n = 32;
    for (int i = 0; i < n / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            const auto [p, dp] = legendre(n, x);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const auto [p, dp] = legendre(n, x);
        (void)p;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

// One 32x32 tensor panel over [x0,x1]x[y0,y1].
double panel_2d(const std::function<double(double, double)>& f, double x0, double x1, double y0,
                double y1) {
    const auto& rule = gauss_legendre_32();
    const double hx = 0.5 * (x1 - x0), cx = 0.5 * (x1 + x0);
    const double hy = 0.5 * (y1 - y0), cy = 0.5 * (y1 + y0);
    double sum = 0.0;
    for (int i = 0; i < 32; ++i) {
        const double x = cx + hx * rule.nodes[i];
        double row = 0.0;
        for (int j = 0; j < 32; ++j) {
            row += rule.weights[j] * f(x, cy + hy * rule.nodes[j]);
        }
        sum += rule.weights[i] * row;
    }
    return sum * hx * hy;
}

double level_sum_2d(const std::function<double(double, double)>& f, double x0, double x1,
                    double y0, double y1, int level) {
    const int n = 1 << level;
    const double dx = (x1 - x0) / n, dy = (y1 - y0) / n;
    double total = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            total += panel_2d(f, x0 + i * dx, x0 + (i + 1) * dx, y0 + j * dy, y0 + (j + 1) * dy);
    return total;
}

[[noreturn]] void throw_quadrature(double estimate, double err, int max_depth) {
    std::ostringstream msg;
    msg << "quadrature failed to converge within " << max_depth
        << " refinement levels; estimate " << estimate << ", error bound " << err;
    throw quadrature_error(msg.str(), estimate, err);
}

}  // namespace

const GaussLegendre32& gauss_legendre_32() {
    static const GaussLegendre32 rule = compute_rule();
    return rule;
}

QuadratureResult integrate_rectangle(const std::function<double(double, double)>& f, double x0,
                                     double x1, double y0, double y1, double rel_tol,
                                     int max_depth) {
    double prev = level_sum_2d(f, x0, x1, y0, y1, 0);
    for (int level = 1; level <= max_depth; ++level) {
        const double cur = level_sum_2d(f, x0, x1, y0, y1, level);
        const double err = std::abs(cur - prev);
        if (err <= rel_tol * std::abs(cur)) return {cur, err, level};
        prev = cur;
    }
    throw_quadrature(prev, std::abs(prev) * rel_tol, max_depth);
}

QuadratureResult integrate_shape(const Shape& shape, const std::function<double(double, double)>& f,
                                 double rel_tol, int max_depth) {
    return std::visit(
        [&](const auto& s) -> QuadratureResult {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Circle> || std::is_same_v<T, Ellipse>) {
                double a, b;
                if constexpr (std::is_same_v<T, Circle>) {
                    a = b = s.radius;
                } else {
                    a = s.semi_major;
                    b = s.semi_minor;
                }
                auto mapped = [&f, a, b](double rho, double theta) {
                    const double x = a * rho * std::cos(theta);
                    const double y = b * rho * std::sin(theta);
                    return f(x, y) * a * b * rho;
                };
                return integrate_rectangle(mapped, 0.0, 1.0, 0.0, 2.0 * std::numbers::pi, rel_tol,
                                           max_depth);
            } else if constexpr (std::is_same_v<T, Square> || std::is_same_v<T, Rectangle> ||
                                 std::is_same_v<T, Cantilever>) {
                const auto he = half_extents(Shape{s});
                double ox = 0.0;
                if constexpr (std::is_same_v<T, Cantilever>) ox = 0.5 * s.length;
                return integrate_rectangle([&f, ox](double x, double y) { return f(x + ox, y); },
                                           -he[0], he[0], -he[1], he[1], rel_tol, max_depth);
            } else {  // Pentagon: centroid triangle fan, Duffy map per triangle
                const auto verts = pentagon_vertices(s.edge);
                double total = 0.0, err = 0.0;
                int depth = 0;
                for (int k = 0; k < 5; ++k) {
                    const auto& p = verts[k];
                    const auto& q = verts[(k + 1) % 5];
                    // (u, v) in [0,1]^2 -> u * ((1-v) p + v q), Jacobian u |p x q|
                    const double cross = std::abs(p[0] * q[1] - p[1] * q[0]);
                    auto mapped = [&f, &p, &q, cross](double u, double v) {
                        const double x = u * ((1.0 - v) * p[0] + v * q[0]);
                        const double y = u * ((1.0 - v) * p[1] + v * q[1]);
                        return f(x, y) * u * cross;
                    };
                    const auto r = integrate_rectangle(mapped, 0.0, 1.0, 0.0, 1.0, rel_tol,
                                                       max_depth);
                    total += r.value;
                    err += r.error_estimate;
                    depth = std::max(depth, r.depth);
                }
                return {total, err, depth};
            }
        },
        shape);
}

QuadratureResult integrate_segment(const std::function<double(double)>& f, double a, double b,
                                   double rel_tol, int max_depth) {
    const auto& rule = gauss_legendre_32();
    auto level_sum = [&](int level) {
        const int n = 1 << level;
        const double dt = (b - a) / n;
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            const double lo = a + i * dt;
            const double h = 0.5 * dt, c = lo + h;
            double sum = 0.0;
            for (int j = 0; j < 32; ++j) sum += rule.weights[j] * f(c + h * rule.nodes[j]);
            total += sum * h;
        }
        return total;
    };
    double prev = level_sum(0);
    for (int level = 1; level <= max_depth; ++level) {
        const double cur = level_sum(level);
        const double err = std::abs(cur - prev);
        if (err <= rel_tol * std::abs(cur)) return {cur, err, level};
        prev = cur;
    }
    throw_quadrature(prev, std::abs(prev) * rel_tol, max_depth);
}

}  // namespace capsense
