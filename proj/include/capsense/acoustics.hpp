#pragma once

namespace capsense {

// Hearing-threshold reference pressure for SPL, 20 uPa.
inline constexpr double reference_pressure = 20e-6;

double spl_to_pressure(double spl_db);
double pressure_to_spl(double pressure_pa);

}  // namespace capsense
