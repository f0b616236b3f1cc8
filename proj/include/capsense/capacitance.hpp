#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "capsense/cp_curve.hpp"
#include "capsense/geometry.hpp"
#include "capsense/plate.hpp"

namespace capsense {

inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m, CODATA

struct DielectricLayer {
    double thickness;              // m
    double relative_permittivity;  // >= 1
};

// Series stack of insulator layers; electrically equivalent to an air gap of
// effective_thickness = sum(t_i / eps_i).
struct DielectricStack {
    std::vector<DielectricLayer> layers;

    explicit DielectricStack(std::vector<DielectricLayer> layers);

    double effective_thickness() const;
    double total_thickness() const;
};

// Gap plus insulator description of a full sensor stack; the optional second
// cavity turns a single-touch device into a double-touch one.
struct SensorStack {
    struct SecondCavity {
        double hole_radius;        // m
        double step_depth;         // m
        double step_permittivity;  // of the stepped layer
    };

    double gap;                    // air gap at rest, m
    DielectricStack insulator_layers;
    std::optional<SecondCavity> second_cavity;

    SensorStack(double gap, DielectricStack insulator_layers,
                std::optional<SecondCavity> second_cavity = std::nullopt);
};

// C0 = eps0 A / d_eff of the stack.
double base_capacitance(double area, const DielectricStack& stack);

// Closed form for the quartic circular profile: C = C0 artanh(sqrt k)/sqrt k,
// k = w0 / gap. Throws touch_regime_error at w0 >= gap.
double deflected_capacitance_circular(double radius, double gap, double w0, double eps_r);

// Surface integral of eps / (gap - W) over the shape. The field must stay
// below (1 - 1e-6) gap. Grid-backed (piecewise-linear) fields converge slowly
// here; integrate those on their own grid instead.
double deflected_capacitance_quadrature(const DeflectionField& field, const Shape& shape,
                                        double gap, double eps_r);

// Supplies deflection fields for non-circular shapes, scaled to w0.
using FieldFactory = std::function<DeflectionField(const PlateConfig&, double w0)>;

// Normal-mode C(P) over sorted pre-touch pressures. Circle uses the
// large-deflection closed form; other shapes need a field factory (oracle or
// assumed_profile based).
CPCurve capacitance_pressure_curve(const PlateConfig& plate, const SensorStack& stack,
                                   std::span<const double> pressures,
                                   FormulaMode mode = FormulaMode::consistent,
                                   const FieldFactory& fields = {});

}  // namespace capsense
