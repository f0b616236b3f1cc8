#include "capsense/capacitance.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "capsense/errors.hpp"
#include "capsense/quadrature.hpp"

namespace capsense {

namespace {

constexpr double kTouchGuard = 1e-6;
constexpr double kQuadratureTolerance = 1e-8;

// artanh(sqrt k)/sqrt k, series below k ~ 1e-8 where the ratio degenerates.
double artanh_ratio(double k) {
    if (k < 1e-8) return 1.0 + k / 3.0 + k * k / 5.0;
    const double s = std::sqrt(k);
    return std::atanh(s) / s;
}

}  // namespace

DielectricStack::DielectricStack(std::vector<DielectricLayer> layers_in)
    : layers(std::move(layers_in)) {
    if (layers.empty())
        throw std::invalid_argument("DielectricStack: at least one layer required");
    for (const auto& layer : layers) {
        if (!(layer.thickness > 0.0))
            throw std::invalid_argument("DielectricStack: layer thickness must be positive");
        if (!(layer.relative_permittivity >= 1.0))
            throw std::invalid_argument("DielectricStack: relative permittivity must be >= 1");
    }
}

double DielectricStack::effective_thickness() const {
    double sum = 0.0;
    for (const auto& layer : layers) sum += layer.thickness / layer.relative_permittivity;
    return sum;
}

double DielectricStack::total_thickness() const {
    double sum = 0.0;
    for (const auto& layer : layers) sum += layer.thickness;
    return sum;
}

SensorStack::SensorStack(double gap_in, DielectricStack insulator_layers_in,
                         std::optional<SecondCavity> second_cavity_in)
    : gap(gap_in),
      insulator_layers(std::move(insulator_layers_in)),
      second_cavity(std::move(second_cavity_in)) {
    if (!(gap > 0.0)) throw std::invalid_argument("SensorStack: gap must be positive");
    if (second_cavity) {
        if (!(second_cavity->hole_radius > 0.0))
            throw std::invalid_argument("SensorStack: hole radius must be positive");
        if (!(second_cavity->step_depth > 0.0))
            throw std::invalid_argument("SensorStack: step depth must be positive");
        if (!(second_cavity->step_permittivity >= 1.0))
            throw std::invalid_argument("SensorStack: step permittivity must be >= 1");
    }
}

double base_capacitance(double area, const DielectricStack& stack) {
    if (!(area > 0.0)) throw std::invalid_argument("base_capacitance: area must be positive");
    return vacuum_permittivity * area / stack.effective_thickness();
}

double deflected_capacitance_circular(double radius, double gap, double w0, double eps_r) {
    if (!(radius > 0.0 && gap > 0.0))
        throw std::invalid_argument("deflected_capacitance_circular: radius and gap must be positive");
    if (!(w0 >= 0.0))
        throw std::invalid_argument("deflected_capacitance_circular: deflection must be >= 0");
    if (w0 >= gap)
        throw touch_regime_error(
            "deflected_capacitance_circular: deflection reaches the gap; use touch_mode");
    const double c0 = vacuum_permittivity * eps_r * surface_area(Shape{Circle{radius}}) / gap;
    return c0 * artanh_ratio(w0 / gap);
}

double deflected_capacitance_quadrature(const DeflectionField& field, const Shape& shape,
                                        double gap, double eps_r) {
    if (!(gap > 0.0))
        throw std::invalid_argument("deflected_capacitance_quadrature: gap must be positive");
    if (field.max_deflection >= (1.0 - kTouchGuard) * gap)
        throw touch_regime_error(
            "deflected_capacitance_quadrature: field reaches the gap; use touch_mode");
    const double eps = vacuum_permittivity * eps_r;
    auto integrand = [&](double x, double y) { return eps / (gap - field.w(x, y)); };
    return integrate_shape(shape, integrand, kQuadratureTolerance).value;
}

CPCurve capacitance_pressure_curve(const PlateConfig& plate, const SensorStack& stack,
                                   std::span<const double> pressures, FormulaMode mode,
                                   const FieldFactory& fields) {
    for (std::size_t i = 1; i < pressures.size(); ++i)
        if (!(pressures[i] > pressures[i - 1]))
            throw std::invalid_argument("capacitance_pressure_curve: pressures must ascend");

    const bool circular = is_circle(plate.geometry.shape);
    const double gap = stack.gap;
    // The insulator stack enters only through the series gap; air eps_r = 1.
    const double d_eff = gap + stack.insulator_layers.effective_thickness();

    CPCurve curve;
    curve.points.reserve(pressures.size());
    std::ostringstream summary;
    summary << shape_name(plate.geometry.shape) << " normal-mode curve, gap " << gap << " m";
    curve.config_summary = summary.str();

    for (const double p : pressures) {
        if (!(p >= 0.0))
            throw std::invalid_argument("capacitance_pressure_curve: pressures must be >= 0");
        double c;
        if (circular) {
            const double w0 = max_deflection_large(plate, p);
            if (w0 >= gap)
                throw touch_regime_error(
                    "capacitance_pressure_curve: point past touch; use touch_mode curves");
            c = deflected_capacitance_circular(std::get<Circle>(plate.geometry.shape).radius,
                                               d_eff, w0, 1.0);
        } else {
            const double w0 = max_deflection_small(plate, p, mode);
            if (w0 >= gap)
                throw touch_regime_error(
                    "capacitance_pressure_curve: point past touch; use touch_mode curves");
            const DeflectionField field =
                fields ? fields(plate, w0) : assumed_profile(plate.geometry, w0);
            c = deflected_capacitance_quadrature(field, plate.geometry.shape, d_eff, 1.0);
        }
        curve.points.push_back({p, c, Region::normal});
    }
    curve.validate();
    return curve;
}

}  // namespace capsense
