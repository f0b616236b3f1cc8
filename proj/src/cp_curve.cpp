#include "capsense/cp_curve.hpp"

#include <stdexcept>

namespace capsense {

std::string_view to_string(Region region) {
    switch (region) {
        case Region::normal: return "normal";
        case Region::transition: return "transition";
        case Region::linear_touch: return "linear_touch";
        case Region::saturation: return "saturation";
    }
    return "unknown";
}

std::optional<Region> region_from_string(std::string_view name) {
    if (name == "normal") return Region::normal;
    if (name == "transition") return Region::transition;
    if (name == "linear_touch") return Region::linear_touch;
    if (name == "saturation") return Region::saturation;
    return std::nullopt;
}

void CPCurve::validate() const {
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (!(points[i].pressure > points[i - 1].pressure))
            throw std::invalid_argument("CPCurve: pressures must strictly ascend");
        if (points[i].capacitance < points[i - 1].capacitance)
            throw std::invalid_argument("CPCurve: capacitance must be nondecreasing");
        if (static_cast<int>(points[i].region) < static_cast<int>(points[i - 1].region))
            throw std::invalid_argument("CPCurve: region labels must not regress");
    }
}

std::vector<double> CPCurve::pressures() const {
    std::vector<double> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(p.pressure);
    return out;
}

std::vector<double> CPCurve::capacitances() const {
    std::vector<double> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(p.capacitance);
    return out;
}

}  // namespace capsense
