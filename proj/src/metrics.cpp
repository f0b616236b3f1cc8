#include "capsense/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace capsense {

namespace {

struct WindowPoints {
    std::vector<double> x;
    std::vector<double> y;
};

WindowPoints window_points(const CPCurve& curve, double p_lo, double p_hi) {
    if (!(p_lo < p_hi)) throw std::invalid_argument("metrics: window must satisfy p_lo < p_hi");
    WindowPoints w;
    for (const auto& pt : curve.points) {
        if (pt.pressure >= p_lo && pt.pressure <= p_hi) {
            w.x.push_back(pt.pressure);
            w.y.push_back(pt.capacitance);
        }
    }
    if (w.x.size() < 2)
        throw std::invalid_argument("metrics: window must contain at least two curve points");
    return w;
}

LinearFit ols(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    long double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const long double mx = sx / n, my = sy / n;
    long double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const long double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0)
        throw std::invalid_argument("linear_fit: need at least two distinct x values");
    const double slope = static_cast<double>(sxy / sxx);
    const double intercept = static_cast<double>(my - (sxy / sxx) * mx);
    double r2 = 0.0;
    if (syy > 0) {
        const long double ss_res = syy - sxy * sxy / sxx;
        r2 = static_cast<double>(1.0L - ss_res / syy);
        r2 = std::clamp(r2, 0.0, 1.0);
    }
    return {slope, intercept, r2, x.front(), x.back()};
}

// Vertical strip width max(y - m x) - min(y - m x); convex piecewise-linear in m.
double strip_width(std::span<const double> x, std::span<const double> y, double m) {
    double lo = y[0] - m * x[0], hi = lo;
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double r = y[i] - m * x[i];
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    return hi - lo;
}

}  // namespace

LinearFit linear_fit(std::span<const std::pair<double, double>> points) {
    if (points.size() < 2)
        throw std::invalid_argument("linear_fit: need at least two points");
    std::vector<double> x, y;
    x.reserve(points.size());
    y.reserve(points.size());
    for (const auto& [px, py] : points) {
        x.push_back(px);
        y.push_back(py);
    }
    return ols(x, y);
}

double sensitivity(const CPCurve& curve, double p_lo, double p_hi) {
    const auto w = window_points(curve, p_lo, p_hi);
    return ols(w.x, w.y).slope;
}

double nonlinearity(const CPCurve& curve, double p_lo, double p_hi) {
    const auto w = window_points(curve, p_lo, p_hi);
    const double y_max = *std::max_element(w.y.begin(), w.y.end());
    const double y_min = *std::min_element(w.y.begin(), w.y.end());
    const double span = y_max - y_min;
    if (!(span > 0.0)) throw std::invalid_argument("nonlinearity: curve has zero span");

    // Minimax slope lies within width(c)/x_range of the extreme-point secant c.
    std::size_t i_lo = 0, i_hi = 0;
    for (std::size_t i = 1; i < w.x.size(); ++i) {
        if (w.x[i] < w.x[i_lo]) i_lo = i;
        if (w.x[i] > w.x[i_hi]) i_hi = i;
    }
    const double x_range = w.x[i_hi] - w.x[i_lo];
    const double secant = (w.y[i_hi] - w.y[i_lo]) / x_range;
    const double radius = strip_width(w.x, w.y, secant) / x_range + 1e-300;
    double a = secant - radius, b = secant + radius;

    constexpr double golden = 0.6180339887498949;
    double m1 = b - golden * (b - a), m2 = a + golden * (b - a);
    double f1 = strip_width(w.x, w.y, m1), f2 = strip_width(w.x, w.y, m2);
    for (int it = 0; it < 200; ++it) {
        if (f1 < f2) {
            b = m2;
            m2 = m1;
            f2 = f1;
            m1 = b - golden * (b - a);
            f1 = strip_width(w.x, w.y, m1);
        } else {
            a = m1;
            m1 = m2;
            f1 = f2;
            m2 = a + golden * (b - a);
            f2 = strip_width(w.x, w.y, m2);
        }
    }
    const double best = std::min(f1, f2);
    return 0.5 * best / span;
}

std::optional<LinearFit> widest_linear_window(const CPCurve& curve, double r2_min) {
    const auto& pts = curve.points;
    const std::size_t n = pts.size();
    if (n < 3) throw std::invalid_argument("widest_linear_window: need at least three points");

    // prefix sums for O(1) per-window statistics
    std::vector<long double> sx(n + 1, 0), sy(n + 1, 0), sxx(n + 1, 0), sxy(n + 1, 0),
        syy(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const long double x = pts[i].pressure, y = pts[i].capacitance;
        sx[i + 1] = sx[i] + x;
        sy[i + 1] = sy[i] + y;
        sxx[i + 1] = sxx[i] + x * x;
        sxy[i + 1] = sxy[i] + x * y;
        syy[i + 1] = syy[i] + y * y;
    }
    auto window_r2 = [&](std::size_t l, std::size_t r) {  // inclusive indices
        const long double m = static_cast<long double>(r - l + 1);
        const long double dx = sx[r + 1] - sx[l], dy = sy[r + 1] - sy[l];
        const long double cxx = (sxx[r + 1] - sxx[l]) - dx * dx / m;
        const long double cxy = (sxy[r + 1] - sxy[l]) - dx * dy / m;
        const long double cyy = (syy[r + 1] - syy[l]) - dy * dy / m;
        if (cyy <= 0 || cxx <= 0) return 0.0;
        double r2 = static_cast<double>((cxy * cxy) / (cxx * cyy));
        return std::clamp(r2, 0.0, 1.0);
    };

    for (std::size_t len = n; len >= 3; --len) {
        for (std::size_t l = 0; l + len <= n; ++l) {
            const std::size_t r = l + len - 1;
            if (window_r2(l, r) >= r2_min) {
                std::vector<double> x, y;
                x.reserve(len);
                y.reserve(len);
                for (std::size_t i = l; i <= r; ++i) {
                    x.push_back(pts[i].pressure);
                    y.push_back(pts[i].capacitance);
                }
                return ols(x, y);
            }
        }
    }
    return std::nullopt;
}

CPCurve read_curve_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("read_curve_csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "pressure_pa,capacitance_f")
        throw std::invalid_argument(
            "read_curve_csv: expected header 'pressure_pa,capacitance_f', got '" + line + "'");
    CPCurve curve;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string a, b;
        if (!std::getline(row, a, ',') || !std::getline(row, b, ','))
            throw std::invalid_argument("read_curve_csv: malformed row at line " +
                                        std::to_string(line_no));
        try {
            curve.points.push_back({std::stod(a), std::stod(b), Region::normal});
        } catch (const std::exception&) {
            throw std::invalid_argument("read_curve_csv: non-numeric value at line " +
                                        std::to_string(line_no));
        }
    }
    for (std::size_t i = 1; i < curve.points.size(); ++i)
        if (!(curve.points[i].pressure > curve.points[i - 1].pressure))
            throw std::invalid_argument("read_curve_csv: pressures must strictly ascend");
    curve.config_summary = "measurement csv";
    return curve;
}

}  // namespace capsense
