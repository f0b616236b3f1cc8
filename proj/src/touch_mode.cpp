#include "capsense/touch_mode.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "capsense/errors.hpp"
#include "capsense/quadrature.hpp"

namespace capsense {

namespace {

constexpr double kRadialTolerance = 1e-12;

// Free-profile depth at radius r for center deflection w0.
double free_profile(double w0, double r, double radius) {
    const double u = 1.0 - (r / radius) * (r / radius);
    return w0 * u * u;
}

// eps0 * integral of 2 pi r / (gap_eff - W(r)) over [r0, r1], W already truncated.
double annulus_capacitance(double r0, double r1, double gap_eff, double w0, double radius) {
    if (r1 <= r0) return 0.0;
    auto integrand = [&](double r) {
        const double w = std::min(free_profile(w0, r, radius), gap_eff * (1.0 - 1e-12));
        return 2.0 * std::numbers::pi * r / (gap_eff - w);
    };
    return vacuum_permittivity * integrate_segment(integrand, r0, r1, kRadialTolerance).value;
}

double disc_area(double r) { return std::numbers::pi * r * r; }

}  // namespace

TouchSensorConfig::TouchSensorConfig(PlateConfig plate_in, double gap_in,
                                     DielectricStack contact_insulator_in,
                                     std::optional<SecondCavity> second_cavity_in,
                                     RegionThresholds thresholds_in)
    : plate(std::move(plate_in)),
      gap(gap_in),
      contact_insulator(std::move(contact_insulator_in)),
      second_cavity(std::move(second_cavity_in)),
      thresholds(thresholds_in) {
    if (!is_circle(plate.geometry.shape))
        throw wrong_geometry_error("TouchSensorConfig: circular plate required");
    if (!(gap > 0.0)) throw std::invalid_argument("TouchSensorConfig: gap must be positive");
    if (!(contact_insulator.effective_thickness() > 0.0))
        throw std::invalid_argument("TouchSensorConfig: contact insulator must have thickness");
    if (second_cavity) {
        if (!(second_cavity->hole_radius > 0.0 && second_cavity->hole_radius < radius()))
            throw std::invalid_argument(
                "TouchSensorConfig: hole radius must lie inside the diaphragm");
        if (!(second_cavity->step_depth > 0.0))
            throw std::invalid_argument("TouchSensorConfig: step depth must be positive");
        if (!(second_cavity->step_insulator.effective_thickness() > 0.0))
            throw std::invalid_argument("TouchSensorConfig: step insulator must have thickness");
    }
    if (!(thresholds.transition_end > 0.0 && thresholds.transition_end < thresholds.saturation_start &&
          thresholds.saturation_start < 1.0))
        throw std::invalid_argument("TouchSensorConfig: thresholds must satisfy 0 < t < s < 1");
}

double TouchSensorConfig::radius() const {
    return std::get<Circle>(plate.geometry.shape).radius;
}

TouchSensorConfig TouchSensorConfig::from_stack(PlateConfig plate, const SensorStack& stack,
                                                RegionThresholds thresholds) {
    std::optional<SecondCavity> cavity;
    if (stack.second_cavity) {
        // Landing on the step goes through the step layer plus the bottom insulation.
        std::vector<DielectricLayer> step_layers = {
            {stack.second_cavity->step_depth, stack.second_cavity->step_permittivity}};
        for (const auto& layer : stack.insulator_layers.layers) step_layers.push_back(layer);
        cavity = SecondCavity{stack.second_cavity->hole_radius, stack.second_cavity->step_depth,
                              DielectricStack(std::move(step_layers))};
    }
    return TouchSensorConfig(std::move(plate), stack.gap, stack.insulator_layers,
                             std::move(cavity), thresholds);
}

double contact_radius(double w0_free, double gap, double radius) {
    if (!(w0_free >= 0.0))
        throw std::invalid_argument("contact_radius: free deflection must be >= 0");
    if (w0_free <= gap) return 0.0;
    return radius * std::sqrt(1.0 - std::sqrt(gap / w0_free));
}

double first_touch_pressure(const TouchSensorConfig& config) {
    const double depth =
        config.second_cavity ? config.gap + config.second_cavity->step_depth : config.gap;
    return touch_point_pressure(config.plate, depth);
}

std::optional<double> second_touch_pressure(const TouchSensorConfig& config) {
    if (!config.second_cavity) return std::nullopt;
    const double ratio = config.second_cavity->hole_radius / config.radius();
    const double u = 1.0 - ratio * ratio;
    return touch_point_pressure(config.plate, config.gap / (u * u));
}

Region classify_region(const TouchSensorConfig& config, double pressure) {
    if (!(pressure >= 0.0))
        throw std::invalid_argument("classify_region: pressure must be >= 0");
    const double w0 = max_deflection_large(config.plate, pressure);
    // Double touch classifies against the final floor, the deepest landing
    // surface through the hole; the label then leaves normal exactly at TP1.
    const double floor_depth =
        config.second_cavity ? config.gap + config.second_cavity->step_depth : config.gap;
    const double rc = contact_radius(w0, floor_depth, config.radius());
    if (rc == 0.0) return Region::normal;
    const double fraction = rc / config.radius();
    if (fraction < config.thresholds.transition_end) return Region::transition;
    if (fraction <= config.thresholds.saturation_start) return Region::linear_touch;
    return Region::saturation;
}

std::pair<double, Region> single_touch_capacitance(const TouchSensorConfig& config,
                                                   double pressure) {
    if (!(pressure >= 0.0))
        throw std::invalid_argument("single_touch_capacitance: pressure must be >= 0");
    if (config.second_cavity)
        throw std::invalid_argument(
            "single_touch_capacitance: config has a second cavity; use double_touch_capacitance");
    const double radius = config.radius();
    const double w0 = max_deflection_large(config.plate, pressure);
    const double d_ins = config.contact_insulator.effective_thickness();
    const double gap_eff = config.gap + d_ins;
    const double rc = contact_radius(w0, config.gap, radius);

    double c = vacuum_permittivity * disc_area(rc) / d_ins;
    c += annulus_capacitance(rc, radius, gap_eff, w0, radius);
    return {c, classify_region(config, pressure)};
}

std::pair<double, Region> double_touch_capacitance(const TouchSensorConfig& config,
                                                   double pressure) {
    if (!(pressure >= 0.0))
        throw std::invalid_argument("double_touch_capacitance: pressure must be >= 0");
    if (!config.second_cavity)
        throw std::invalid_argument(
            "double_touch_capacitance: config lacks a second cavity; use single_touch_capacitance");
    const double radius = config.radius();
    const auto& cavity = *config.second_cavity;
    const double w0 = max_deflection_large(config.plate, pressure);

    const double d_hole = config.contact_insulator.effective_thickness();
    const double d_step = cavity.step_insulator.effective_thickness();
    const double hole_floor = config.gap + cavity.step_depth;
    const double rh = cavity.hole_radius;

    // Contact boundaries of the free profile against each floor.
    const double rc_hole = std::min(contact_radius(w0, hole_floor, radius), rh);
    const double rc_step = contact_radius(w0, config.gap, radius);

    // Hole zone [0, rh): floor at hole_floor, insulation d_hole.
    double c = vacuum_permittivity * disc_area(rc_hole) / d_hole;
    c += annulus_capacitance(rc_hole, rh, hole_floor + d_hole, w0, radius);

    // Step zone [rh, R]: floor at gap, insulation d_step.
    const double step_contact_outer = std::clamp(rc_step, rh, radius);
    c += vacuum_permittivity * (disc_area(step_contact_outer) - disc_area(rh)) / d_step;
    c += annulus_capacitance(step_contact_outer, radius, config.gap + d_step, w0, radius);

    return {c, classify_region(config, pressure)};
}

CPCurve touch_curve(const TouchSensorConfig& config, double p_max, int n_points) {
    if (!(p_max > 0.0)) throw std::invalid_argument("touch_curve: p_max must be positive");
    if (n_points < 2) throw std::invalid_argument("touch_curve: need at least two points");

    CPCurve curve;
    curve.points.reserve(static_cast<std::size_t>(n_points));
    const bool twin = config.second_cavity.has_value();
    for (int i = 0; i < n_points; ++i) {
        const double p = p_max * static_cast<double>(i) / (n_points - 1);
        const auto [c, region] =
            twin ? double_touch_capacitance(config, p) : single_touch_capacitance(config, p);
        curve.points.push_back({p, c, region});
    }
    curve.touch_pressure_1 = first_touch_pressure(config);
    curve.touch_pressure_2 = second_touch_pressure(config);

    std::ostringstream summary;
    summary << (twin ? "double" : "single") << "-touch curve, R " << config.radius() << " m, gap "
            << config.gap << " m";
    curve.config_summary = summary.str();
    curve.validate();
    return curve;
}

}  // namespace capsense
