#pragma once

#include <stdexcept>
#include <string>

namespace capsense {

// Operation was called with a geometry variant it does not support.
class wrong_geometry_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Deflection reaches or exceeds the gap; normal-mode formulas no longer apply.
class touch_regime_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Evaluation requested too close to an undamped resonance.
class resonance_proximity_error : public std::domain_error {
public:
    resonance_proximity_error(const std::string& what, int mode, double frequency_hz)
        : std::domain_error(what), mode_(mode), frequency_hz_(frequency_hz) {}

    int mode() const noexcept { return mode_; }
    double frequency_hz() const noexcept { return frequency_hz_; }

private:
    int mode_;
    double frequency_hz_;
};

// A numerical procedure failed to reach its tolerance; carries diagnostics text.
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Adaptive quadrature hit its refinement cap; carries the best estimate.
class quadrature_error : public numerical_error {
public:
    quadrature_error(const std::string& what, double estimate, double error_bound)
        : numerical_error(what), estimate_(estimate), error_bound_(error_bound) {}

    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

}  // namespace capsense
