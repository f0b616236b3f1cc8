#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace capsense {

enum class Region { normal, transition, linear_touch, saturation };

std::string_view to_string(Region region);
std::optional<Region> region_from_string(std::string_view name);

struct CurvePoint {
    double pressure;     // Pa
    double capacitance;  // F
    Region region = Region::normal;
};

// Sampled capacitance-pressure curve. Pressures strictly ascend, capacitance
// never decreases, and region labels never regress along the curve.
struct CPCurve {
    std::vector<CurvePoint> points;
    std::optional<double> touch_pressure_1;  // TP (single) or TP1 (double), Pa
    std::optional<double> touch_pressure_2;  // TP2 (double only), Pa
    std::string config_summary;

    void validate() const;  // throws std::invalid_argument on violation

    std::vector<double> pressures() const;
    std::vector<double> capacitances() const;
};

}  // namespace capsense
