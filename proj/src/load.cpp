#include "capsense/load.hpp"

#include <numbers>
#include <stdexcept>

namespace capsense {

StaticLoad::StaticLoad(double pressure) : pressure(pressure) {
    if (!(pressure >= 0.0))
        throw std::invalid_argument("StaticLoad: pressure must be non-negative");
}

HarmonicLoad::HarmonicLoad(double amplitude, double frequency)
    : amplitude(amplitude), frequency(frequency) {
    if (!(amplitude >= 0.0))
        throw std::invalid_argument("HarmonicLoad: amplitude must be non-negative");
    if (!(frequency > 0.0))
        throw std::invalid_argument("HarmonicLoad: frequency must be positive");
}

double HarmonicLoad::angular_frequency() const {
    return 2.0 * std::numbers::pi * frequency;
}

}  // namespace capsense
