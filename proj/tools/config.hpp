#pragma once

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "capsense/cantilever.hpp"
#include "capsense/capacitance.hpp"
#include "capsense/geometry.hpp"
#include "capsense/load.hpp"
#include "capsense/material.hpp"
#include "capsense/plate.hpp"
#include "capsense/touch_mode.hpp"

namespace capsense::cli {

using json = nlohmann::ordered_json;

// Schema violation with the offending field path; maps to exit code 2.
class config_error : public std::runtime_error {
public:
    config_error(std::string path, const std::string& message)
        : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

struct RangeSpec {
    double min;
    double max;
    int points;
};

struct SweepDimension {
    std::string parameter;  // dotted config path, e.g. "geometry.radius"
    double from;
    double to;
    int steps;
};

struct SearchDimension {
    std::string parameter;
    double min;
    double max;
    int grid;
};

struct SearchConstraint {
    enum class Kind { linear_window_covers, touch_point_outside };
    Kind kind;
    double p_lo;
    double p_hi;
};

struct SearchSpec {
    enum class Objective { max_sensitivity, min_nonlinearity };
    Objective objective;
    std::optional<RangeSpec> window;
    std::vector<SearchDimension> dimensions;
    std::vector<SearchConstraint> constraints;
    int refine_iterations = 32;
};

enum class CurveMode { automatic, normal, single_touch, double_touch };
enum class ProfileSource { oracle, assumed };

// Parsed and validated configuration document, everything in SI.
struct SensorConfig {
    Material material{1.0, 0.0, 1.0};
    std::string material_name;  // empty when explicit constants were given
    DiaphragmGeometry geometry{Circle{1.0}, 1.0};
    double built_in_stress = 0.0;
    std::optional<SensorStack> stack;
    std::optional<PressureLoad> load;
    std::optional<RangeSpec> pressure_range;
    std::optional<RangeSpec> frequency_range;
    int n_modes = 5;
    FormulaMode formula_mode = FormulaMode::consistent;
    ProfileSource profile = ProfileSource::oracle;
    int oracle_nodes = 129;
    std::vector<int> convergence_nodes{65, 129, 257};
    RegionThresholds thresholds;
    double r2_min = 0.999;
    CurveMode mode = CurveMode::automatic;
    std::vector<SweepDimension> sweep;
    std::optional<SearchSpec> search;

    PlateConfig plate() const;  // throws wrong_geometry_error for cantilevers
    CantileverSpec cantilever() const;
};

// Parses a quantity that is either a plain SI number or a "value unit" string.
double parse_quantity(const json& value, const std::string& dimension, const std::string& path);

SensorConfig parse_config(const json& document);
SensorConfig load_config_file(const std::string& filename);

// Applies a numeric override at a dotted path (sweep/search parameters) and
// reparses, so every construction invariant is re-enforced.
json set_config_value(json document, const std::string& parameter, double si_value,
                      const std::string& path_prefix);

// The raw document is kept alongside for sweep/search patching.
struct LoadedConfig {
    json document;
    SensorConfig config;
};

LoadedConfig load_config(const std::string& filename);

}  // namespace capsense::cli
