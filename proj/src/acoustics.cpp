#include "capsense/acoustics.hpp"

#include <cmath>
#include <stdexcept>

namespace capsense {

double spl_to_pressure(double spl_db) {
    return reference_pressure * std::pow(10.0, spl_db / 20.0);
}

double pressure_to_spl(double pressure_pa) {
    if (!(pressure_pa > 0.0))
        throw std::invalid_argument("pressure_to_spl: pressure must be positive");
    return 20.0 * std::log10(pressure_pa / reference_pressure);
}

}  // namespace capsense
