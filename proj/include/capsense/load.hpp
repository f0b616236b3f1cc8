#pragma once

#include <variant>

namespace capsense {

struct StaticLoad {
    double pressure;  // Pa, >= 0

    explicit StaticLoad(double pressure);
};

struct HarmonicLoad {
    double amplitude;  // Pa, >= 0
    double frequency;  // Hz, > 0

    HarmonicLoad(double amplitude, double frequency);

    double angular_frequency() const;  // rad/s
};

using PressureLoad = std::variant<StaticLoad, HarmonicLoad>;

}  // namespace capsense
