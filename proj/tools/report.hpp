#pragma once

#include "config.hpp"

namespace capsense::cli {

inline json material_json(const SensorConfig& config) {
    json m;
    if (!config.material_name.empty()) m["name"] = config.material_name;
    m["youngs_modulus_pa"] = config.material.youngs_modulus;
    m["poisson_ratio"] = config.material.poisson_ratio;
    m["density_kg_m3"] = config.material.density;
    m["note"] = "engineering default constants, not fitted values";
    return m;
}

inline json geometry_json(const SensorConfig& config) {
    json g;
    g["shape"] = shape_name(config.geometry.shape);
    g["area_m2"] = surface_area(config.geometry.shape);
    g["thickness_m"] = config.geometry.thickness;
    return g;
}

}  // namespace capsense::cli
