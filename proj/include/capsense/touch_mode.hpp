#pragma once

#include <optional>
#include <utility>

#include "capsense/capacitance.hpp"
#include "capsense/cp_curve.hpp"
#include "capsense/plate.hpp"

namespace capsense {

// Contact-fraction boundaries of the region labels.
struct RegionThresholds {
    double transition_end = 0.1;    // r_c / R below which contact is "transition"
    double saturation_start = 0.9;  // r_c / R above which the curve saturates
};

// Circular touch-mode sensor. The diaphragm lands on an insulated surface at
// depth gap; a second cavity adds a concentric hole through which it lands
// deeper, at gap + step_depth.
struct TouchSensorConfig {
    struct SecondCavity {
        double hole_radius;  // m, < plate radius
        double step_depth;   // m
        DielectricStack step_insulator;
    };

    PlateConfig plate;  // Circle geometry
    double gap;         // m
    DielectricStack contact_insulator;
    std::optional<SecondCavity> second_cavity;
    RegionThresholds thresholds;

    TouchSensorConfig(PlateConfig plate, double gap, DielectricStack contact_insulator,
                      std::optional<SecondCavity> second_cavity = std::nullopt,
                      RegionThresholds thresholds = RegionThresholds());

    double radius() const;

    // Maps a SensorStack onto zone insulators: the stepped layer lands the
    // diaphragm on step material in series with the bottom insulation.
    static TouchSensorConfig from_stack(PlateConfig plate, const SensorStack& stack,
                                        RegionThresholds thresholds = RegionThresholds());
};

// Radius where the free quartic profile crosses depth gap: 0 below tangency,
// R sqrt(1 - sqrt(gap / w0_free)) above.
double contact_radius(double w0_free, double gap, double radius);

// Pressure at which the free profile first reaches the landing floor:
// single touch and double-touch TP1 (hole floor).
double first_touch_pressure(const TouchSensorConfig& config);

// Double-touch TP2: free profile reaches the step at the hole rim.
std::optional<double> second_touch_pressure(const TouchSensorConfig& config);

// Truncated-profile capacitance of the single-touch sensor at pressure P.
std::pair<double, Region> single_touch_capacitance(const TouchSensorConfig& config,
                                                   double pressure);

// Two-zone truncated-profile capacitance of the double-touch sensor.
std::pair<double, Region> double_touch_capacitance(const TouchSensorConfig& config,
                                                   double pressure);

// Contact-fraction classification against the final (deepest) floor.
Region classify_region(const TouchSensorConfig& config, double pressure);

// Uniform sweep over [0, p_max] with region labels and touch-point metadata.
CPCurve touch_curve(const TouchSensorConfig& config, double p_max, int n_points);

}  // namespace capsense
