#include "capsense/material.hpp"

#include <stdexcept>

namespace capsense {

Material::Material(double youngs_modulus, double poisson_ratio, double density)
    : youngs_modulus(youngs_modulus), poisson_ratio(poisson_ratio), density(density) {
    if (!(youngs_modulus > 0.0))
        throw std::invalid_argument("Material: Young's modulus must be positive");
    if (!(poisson_ratio >= 0.0 && poisson_ratio < 0.5))
        throw std::invalid_argument("Material: Poisson's ratio must be in [0, 0.5)");
    if (!(density > 0.0))
        throw std::invalid_argument("Material: density must be positive");
}

const std::vector<NamedMaterial>& material_table() {
    static const std::vector<NamedMaterial> table = {
        {"PI", Material(2.5e9, 0.34, 1420.0)},        // polyimide film
        {"PET", Material(3.0e9, 0.38, 1380.0)},
        {"PDMS", Material(1.0e6, 0.49, 965.0)},
        {"aluminum", Material(69e9, 0.33, 2700.0)},
        {"steel", Material(200e9, 0.30, 7850.0)},
        {"silicon", Material(170e9, 0.28, 2329.0)},
    };
    return table;
}

std::optional<Material> find_material(std::string_view name) {
    for (const auto& entry : material_table())
        if (entry.name == name) return entry.material;
    return std::nullopt;
}

double flexural_rigidity(const Material& material, double thickness) {
    if (!(thickness > 0.0))
        throw std::invalid_argument("flexural_rigidity: thickness must be positive");
    const double nu = material.poisson_ratio;
    return material.youngs_modulus * thickness * thickness * thickness /
           (12.0 * (1.0 - nu * nu));
}

double beam_rigidity(const Material& material, double width, double thickness) {
    if (!(width > 0.0))
        throw std::invalid_argument("beam_rigidity: width must be positive");
    if (!(thickness > 0.0))
        throw std::invalid_argument("beam_rigidity: thickness must be positive");
    return material.youngs_modulus * width * thickness * thickness * thickness / 12.0;
}

}  // namespace capsense
