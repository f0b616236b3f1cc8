#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace capsense {

// Homogeneous isotropic elastic material, SI units throughout.
struct Material {
    double youngs_modulus;  // Pa
    double poisson_ratio;   // dimensionless, [0, 0.5)
    double density;         // kg/m^3

    Material(double youngs_modulus, double poisson_ratio, double density);
};

struct NamedMaterial {
    std::string name;
    Material material;
};

// Engineering default constants for common foil/film materials. These are not
// measured values for any particular specimen; reports always print the
// constants actually used.
const std::vector<NamedMaterial>& material_table();

std::optional<Material> find_material(std::string_view name);

// Plate bending stiffness D = E h^3 / (12 (1 - nu^2)).
double flexural_rigidity(const Material& material, double thickness);

// Beam bending stiffness E I = E w h^3 / 12 for a rectangular section.
double beam_rigidity(const Material& material, double width, double thickness);

}  // namespace capsense
