#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "capsense/errors.hpp"

namespace capsense::cli {

namespace {

const std::map<std::string, std::map<std::string, double>>& unit_tables() {
    static const std::map<std::string, std::map<std::string, double>> tables = {
        {"length",
         {{"m", 1.0}, {"cm", 1e-2}, {"mm", 1e-3}, {"um", 1e-6}, {"µm", 1e-6}, {"μm", 1e-6},
          {"nm", 1e-9}}},
        {"pressure",
         {{"Pa", 1.0}, {"hPa", 1e2}, {"kPa", 1e3}, {"MPa", 1e6}, {"GPa", 1e9}, {"mPa", 1e-3},
          {"uPa", 1e-6}, {"µPa", 1e-6}, {"μPa", 1e-6}}},
        {"frequency", {{"Hz", 1.0}, {"kHz", 1e3}, {"MHz", 1e6}}},
        {"density", {{"kg/m3", 1.0}, {"kg/m^3", 1.0}, {"g/cm3", 1e3}, {"g/cm^3", 1e3}}},
    };
    return tables;
}

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw config_error(path, message);
}

void check_keys(const json& object, const std::string& path, const std::set<std::string>& allowed) {
    if (!object.is_object()) fail(path, "expected an object");
    for (const auto& [key, value] : object.items()) {
        (void)value;
        if (!allowed.count(key)) fail(path, "unknown key '" + key + "'");
    }
}

const json* find(const json& object, const std::string& key) {
    const auto it = object.find(key);
    return it == object.end() ? nullptr : &*it;
}

const json& require(const json& object, const std::string& key, const std::string& path) {
    const json* value = find(object, key);
    if (!value) fail(path, "missing required key '" + key + "'");
    return *value;
}

double parse_number(const json& value, const std::string& path) {
    if (!value.is_number()) fail(path, "expected a number");
    return value.get<double>();
}

int parse_int(const json& value, const std::string& path, int minimum) {
    if (!value.is_number_integer()) fail(path, "expected an integer");
    const int v = value.get<int>();
    if (v < minimum) fail(path, "must be >= " + std::to_string(minimum));
    return v;
}

double parse_positive(const json& value, const std::string& dimension, const std::string& path) {
    const double v = parse_quantity(value, dimension, path);
    if (!(v > 0.0)) fail(path, "must be positive");
    return v;
}

RangeSpec parse_range(const json& value, const std::string& dimension, const std::string& path) {
    check_keys(value, path, {"min", "max", "points"});
    RangeSpec range{};
    range.min = parse_quantity(require(value, "min", path), dimension, path + ".min");
    range.max = parse_quantity(require(value, "max", path), dimension, path + ".max");
    range.points = parse_int(require(value, "points", path), path + ".points", 2);
    if (!(range.max > range.min)) fail(path, "max must exceed min");
    return range;
}

Material parse_material(const json& value, const std::string& path, std::string& name_out) {
    if (value.is_string()) {
        const auto found = find_material(value.get<std::string>());
        if (!found) fail(path, "unknown material '" + value.get<std::string>() + "'");
        name_out = value.get<std::string>();
        return *found;
    }
    check_keys(value, path, {"youngs_modulus", "poisson_ratio", "density"});
    const double e = parse_positive(require(value, "youngs_modulus", path), "pressure",
                                    path + ".youngs_modulus");
    const double nu = parse_number(require(value, "poisson_ratio", path), path + ".poisson_ratio");
    const double rho =
        parse_positive(require(value, "density", path), "density", path + ".density");
    name_out.clear();
    try {
        return Material(e, nu, rho);
    } catch (const std::invalid_argument& err) {
        fail(path, err.what());
    }
}

DiaphragmGeometry parse_geometry(const json& value, const std::string& path) {
    if (!value.is_object()) fail(path, "expected an object");
    const json& shape_key = require(value, "shape", path);
    if (!shape_key.is_string()) fail(path + ".shape", "expected a string");
    const std::string shape = shape_key.get<std::string>();

    auto len = [&](const char* key) {
        return parse_positive(require(value, key, path), "length", path + "." + key);
    };

    Shape parsed;
    if (shape == "circle") {
        check_keys(value, path, {"shape", "radius", "thickness"});
        parsed = Circle{len("radius")};
    } else if (shape == "ellipse") {
        check_keys(value, path, {"shape", "semi_major", "semi_minor", "thickness"});
        parsed = Ellipse{len("semi_major"), len("semi_minor")};
    } else if (shape == "square") {
        check_keys(value, path, {"shape", "side", "thickness"});
        parsed = Square{len("side")};
    } else if (shape == "rectangle") {
        check_keys(value, path, {"shape", "side_a", "side_b", "thickness"});
        parsed = Rectangle{len("side_a"), len("side_b")};
    } else if (shape == "pentagon") {
        check_keys(value, path, {"shape", "edge", "thickness"});
        parsed = Pentagon{len("edge")};
    } else if (shape == "cantilever") {
        check_keys(value, path, {"shape", "length", "width", "thickness"});
        parsed = Cantilever{len("length"), len("width")};
    } else {
        fail(path + ".shape", "unknown shape '" + shape + "'");
    }
    try {
        return DiaphragmGeometry(parsed, len("thickness"));
    } catch (const std::invalid_argument& err) {
        fail(path, err.what());
    }
}

SensorStack parse_stack(const json& value, const std::string& path) {
    check_keys(value, path, {"gap", "layers", "second_cavity"});
    const double gap = parse_positive(require(value, "gap", path), "length", path + ".gap");

    const json& layers_json = require(value, "layers", path);
    if (!layers_json.is_array() || layers_json.empty())
        fail(path + ".layers", "expected a non-empty array");
    std::vector<DielectricLayer> layers;
    for (std::size_t i = 0; i < layers_json.size(); ++i) {
        const std::string lp = path + ".layers[" + std::to_string(i) + "]";
        check_keys(layers_json[i], lp, {"thickness", "relative_permittivity"});
        const double t =
            parse_positive(require(layers_json[i], "thickness", lp), "length", lp + ".thickness");
        const double er = parse_number(require(layers_json[i], "relative_permittivity", lp),
                                       lp + ".relative_permittivity");
        if (!(er >= 1.0)) fail(lp + ".relative_permittivity", "must be >= 1");
        layers.push_back({t, er});
    }

    std::optional<SensorStack::SecondCavity> cavity;
    if (const json* cav = find(value, "second_cavity")) {
        const std::string cp = path + ".second_cavity";
        check_keys(*cav, cp, {"hole_radius", "step_depth", "step_permittivity"});
        const double rh =
            parse_positive(require(*cav, "hole_radius", cp), "length", cp + ".hole_radius");
        const double t =
            parse_positive(require(*cav, "step_depth", cp), "length", cp + ".step_depth");
        const double er = parse_number(require(*cav, "step_permittivity", cp),
                                       cp + ".step_permittivity");
        if (!(er >= 1.0)) fail(cp + ".step_permittivity", "must be >= 1");
        cavity = SensorStack::SecondCavity{rh, t, er};
    }
    try {
        return SensorStack(gap, DielectricStack(std::move(layers)), cavity);
    } catch (const std::invalid_argument& err) {
        fail(path, err.what());
    }
}

PressureLoad parse_load(const json& value, const std::string& path) {
    const json& type_key = require(value, "type", path);
    if (!type_key.is_string()) fail(path + ".type", "expected a string");
    const std::string type = type_key.get<std::string>();
    try {
        if (type == "static") {
            check_keys(value, path, {"type", "pressure"});
            const double p =
                parse_quantity(require(value, "pressure", path), "pressure", path + ".pressure");
            return StaticLoad(p);
        }
        if (type == "harmonic") {
            check_keys(value, path, {"type", "amplitude", "frequency"});
            const double a =
                parse_quantity(require(value, "amplitude", path), "pressure", path + ".amplitude");
            const double f = parse_quantity(require(value, "frequency", path), "frequency",
                                            path + ".frequency");
            return HarmonicLoad(a, f);
        }
    } catch (const std::invalid_argument& err) {
        fail(path, err.what());
    }
    fail(path + ".type", "expected 'static' or 'harmonic'");
}

std::vector<SweepDimension> parse_sweep(const json& value, const std::string& path) {
    if (!value.is_array() || value.empty()) fail(path, "expected a non-empty array");
    std::vector<SweepDimension> out;
    for (std::size_t i = 0; i < value.size(); ++i) {
        const std::string dp = path + "[" + std::to_string(i) + "]";
        check_keys(value[i], dp, {"parameter", "from", "to", "steps"});
        SweepDimension dim;
        const json& name = require(value[i], "parameter", dp);
        if (!name.is_string()) fail(dp + ".parameter", "expected a string");
        dim.parameter = name.get<std::string>();
        dim.from = parse_quantity(require(value[i], "from", dp), "any", dp + ".from");
        dim.to = parse_quantity(require(value[i], "to", dp), "any", dp + ".to");
        dim.steps = parse_int(require(value[i], "steps", dp), dp + ".steps", 1);
        out.push_back(dim);
    }
    return out;
}

SearchSpec parse_search(const json& value, const std::string& path) {
    check_keys(value, path,
               {"objective", "window", "dimensions", "constraints", "refine_iterations"});
    SearchSpec spec;
    const json& objective = require(value, "objective", path);
    if (!objective.is_string()) fail(path + ".objective", "expected a string");
    const std::string name = objective.get<std::string>();
    if (name == "max_sensitivity")
        spec.objective = SearchSpec::Objective::max_sensitivity;
    else if (name == "min_nonlinearity")
        spec.objective = SearchSpec::Objective::min_nonlinearity;
    else
        fail(path + ".objective", "expected 'max_sensitivity' or 'min_nonlinearity'");

    if (const json* window = find(value, "window"))
        spec.window = parse_range(*window, "pressure", path + ".window");

    const json& dims = require(value, "dimensions", path);
    if (!dims.is_array() || dims.empty())
        fail(path + ".dimensions", "expected a non-empty array");
    for (std::size_t i = 0; i < dims.size(); ++i) {
        const std::string dp = path + ".dimensions[" + std::to_string(i) + "]";
        check_keys(dims[i], dp, {"parameter", "min", "max", "grid"});
        SearchDimension dim;
        const json& pname = require(dims[i], "parameter", dp);
        if (!pname.is_string()) fail(dp + ".parameter", "expected a string");
        dim.parameter = pname.get<std::string>();
        dim.min = parse_quantity(require(dims[i], "min", dp), "any", dp + ".min");
        dim.max = parse_quantity(require(dims[i], "max", dp), "any", dp + ".max");
        if (!(dim.max > dim.min)) fail(dp, "max must exceed min");
        dim.grid = find(dims[i], "grid") ? parse_int(*find(dims[i], "grid"), dp + ".grid", 2) : 8;
        spec.dimensions.push_back(dim);
    }

    if (const json* cons = find(value, "constraints")) {
        if (!cons->is_array()) fail(path + ".constraints", "expected an array");
        for (std::size_t i = 0; i < cons->size(); ++i) {
            const std::string cp = path + ".constraints[" + std::to_string(i) + "]";
            check_keys((*cons)[i], cp, {"type", "min", "max"});
            const json& type = require((*cons)[i], "type", cp);
            if (!type.is_string()) fail(cp + ".type", "expected a string");
            SearchConstraint constraint{};
            const std::string tname = type.get<std::string>();
            if (tname == "linear_window_covers")
                constraint.kind = SearchConstraint::Kind::linear_window_covers;
            else if (tname == "touch_point_outside")
                constraint.kind = SearchConstraint::Kind::touch_point_outside;
            else
                fail(cp + ".type", "unknown constraint '" + tname + "'");
            constraint.p_lo =
                parse_quantity(require((*cons)[i], "min", cp), "pressure", cp + ".min");
            constraint.p_hi =
                parse_quantity(require((*cons)[i], "max", cp), "pressure", cp + ".max");
            if (!(constraint.p_hi > constraint.p_lo)) fail(cp, "max must exceed min");
            if (!(constraint.p_lo > 0.0)) fail(cp, "constraint pressures must be positive");
            spec.constraints.push_back(constraint);
        }
    }
    if (const json* refine = find(value, "refine_iterations"))
        spec.refine_iterations = parse_int(*refine, path + ".refine_iterations", 0);
    return spec;
}

}  // namespace

double parse_quantity(const json& value, const std::string& dimension, const std::string& path) {
    if (value.is_number()) return value.get<double>();
    if (!value.is_string()) fail(path, "expected a number or a 'value unit' string");
    const std::string text = value.get<std::string>();
    std::istringstream stream(text);
    double magnitude;
    if (!(stream >> magnitude)) fail(path, "cannot parse number in '" + text + "'");
    std::string unit;
    stream >> unit;
    std::string rest;
    if (stream >> rest) fail(path, "trailing content in '" + text + "'");
    if (unit.empty()) return magnitude;

    if (dimension == "any") {
        for (const auto& [dim, table] : unit_tables()) {
            const auto it = table.find(unit);
            if (it != table.end()) return magnitude * it->second;
        }
        fail(path, "unknown unit '" + unit + "'");
    }
    const auto table = unit_tables().find(dimension);
    if (table == unit_tables().end()) fail(path, "dimensionless value cannot carry unit '" + unit + "'");
    const auto it = table->second.find(unit);
    if (it == table->second.end())
        fail(path, "unknown " + dimension + " unit '" + unit + "'");
    return magnitude * it->second;
}

PlateConfig SensorConfig::plate() const {
    return PlateConfig(geometry, material, built_in_stress);
}

CantileverSpec SensorConfig::cantilever() const {
    if (!is_cantilever(geometry.shape))
        throw wrong_geometry_error("config: cantilever geometry required for this command");
    const auto& c = std::get<Cantilever>(geometry.shape);
    return CantileverSpec(c.length, c.width, geometry.thickness, material);
}

SensorConfig parse_config(const json& document) {
    check_keys(document, "config",
               {"material", "geometry", "built_in_stress", "stack", "load", "pressure_range",
                "frequency_range", "n_modes", "formula_mode", "profile", "oracle_nodes",
                "convergence_nodes", "region_thresholds", "r2_min", "mode", "sweep", "search"});

    SensorConfig config;
    config.material =
        parse_material(require(document, "material", "config"), "config.material",
                       config.material_name);
    config.geometry = parse_geometry(require(document, "geometry", "config"), "config.geometry");

    if (const json* sigma = find(document, "built_in_stress")) {
        config.built_in_stress =
            parse_quantity(*sigma, "pressure", "config.built_in_stress");
        if (config.built_in_stress < 0.0)
            fail("config.built_in_stress", "must be tensile (>= 0)");
    }
    if (const json* stack = find(document, "stack"))
        config.stack = parse_stack(*stack, "config.stack");
    if (const json* load = find(document, "load"))
        config.load = parse_load(*load, "config.load");
    if (const json* range = find(document, "pressure_range"))
        config.pressure_range = parse_range(*range, "pressure", "config.pressure_range");
    if (const json* range = find(document, "frequency_range"))
        config.frequency_range = parse_range(*range, "frequency", "config.frequency_range");
    if (const json* n = find(document, "n_modes"))
        config.n_modes = parse_int(*n, "config.n_modes", 1);
    if (const json* mode = find(document, "formula_mode")) {
        if (!mode->is_string()) fail("config.formula_mode", "expected a string");
        const std::string name = mode->get<std::string>();
        if (name == "consistent")
            config.formula_mode = FormulaMode::consistent;
        else if (name == "paper-exact")
            config.formula_mode = FormulaMode::paper_exact;
        else
            fail("config.formula_mode", "expected 'consistent' or 'paper-exact'");
    }
    if (const json* profile = find(document, "profile")) {
        if (!profile->is_string()) fail("config.profile", "expected a string");
        const std::string name = profile->get<std::string>();
        if (name == "oracle")
            config.profile = ProfileSource::oracle;
        else if (name == "assumed")
            config.profile = ProfileSource::assumed;
        else
            fail("config.profile", "expected 'oracle' or 'assumed'");
    }
    if (const json* nodes = find(document, "oracle_nodes"))
        config.oracle_nodes = parse_int(*nodes, "config.oracle_nodes", 17);
    if (const json* nodes = find(document, "convergence_nodes")) {
        if (!nodes->is_array() || nodes->size() < 3)
            fail("config.convergence_nodes", "expected an array of at least three node counts");
        config.convergence_nodes.clear();
        for (std::size_t i = 0; i < nodes->size(); ++i)
            config.convergence_nodes.push_back(parse_int(
                (*nodes)[i], "config.convergence_nodes[" + std::to_string(i) + "]", 9));
    }
    if (const json* thresholds = find(document, "region_thresholds")) {
        check_keys(*thresholds, "config.region_thresholds",
                   {"transition_end", "saturation_start"});
        if (const json* t = find(*thresholds, "transition_end"))
            config.thresholds.transition_end =
                parse_number(*t, "config.region_thresholds.transition_end");
        if (const json* s = find(*thresholds, "saturation_start"))
            config.thresholds.saturation_start =
                parse_number(*s, "config.region_thresholds.saturation_start");
        if (!(config.thresholds.transition_end > 0.0 &&
              config.thresholds.transition_end < config.thresholds.saturation_start &&
              config.thresholds.saturation_start < 1.0))
            fail("config.region_thresholds", "need 0 < transition_end < saturation_start < 1");
    }
    if (const json* r2 = find(document, "r2_min")) {
        config.r2_min = parse_number(*r2, "config.r2_min");
        if (!(config.r2_min > 0.0 && config.r2_min <= 1.0))
            fail("config.r2_min", "must lie in (0, 1]");
    }
    if (const json* mode = find(document, "mode")) {
        if (!mode->is_string()) fail("config.mode", "expected a string");
        const std::string name = mode->get<std::string>();
        if (name == "auto")
            config.mode = CurveMode::automatic;
        else if (name == "normal")
            config.mode = CurveMode::normal;
        else if (name == "single_touch")
            config.mode = CurveMode::single_touch;
        else if (name == "double_touch")
            config.mode = CurveMode::double_touch;
        else
            fail("config.mode", "expected auto|normal|single_touch|double_touch");
    }
    if (const json* sweep = find(document, "sweep"))
        config.sweep = parse_sweep(*sweep, "config.sweep");
    if (const json* search = find(document, "search"))
        config.search = parse_search(*search, "config.search");

    if (config.mode == CurveMode::double_touch && (!config.stack || !config.stack->second_cavity))
        fail("config.mode", "double_touch requires stack.second_cavity");
    return config;
}

SensorConfig load_config_file(const std::string& filename) {
    return load_config(filename).config;
}

LoadedConfig load_config(const std::string& filename) {
    std::ifstream in(filename);
    if (!in) fail("config", "cannot open '" + filename + "'");
    json document;
    try {
        document = json::parse(in);
    } catch (const json::parse_error& err) {
        fail("config", std::string("invalid JSON: ") + err.what());
    }
    return {document, parse_config(document)};
}

json set_config_value(json document, const std::string& parameter, double si_value,
                      const std::string& path_prefix) {
    json* node = &document;
    std::string remaining = parameter;
    std::string walked;
    while (true) {
        const auto dot = remaining.find('.');
        const std::string key = remaining.substr(0, dot);
        walked = walked.empty() ? key : walked + "." + key;
        if (!node->is_object() || !node->contains(key))
            fail(path_prefix, "config has no value at '" + walked + "'");
        node = &(*node)[key];
        if (dot == std::string::npos) break;
        remaining = remaining.substr(dot + 1);
    }
    if (!node->is_number() && !node->is_string())
        fail(path_prefix, "'" + parameter + "' is not a numeric field");
    *node = si_value;  // overrides carry plain SI numbers
    return document;
}

}  // namespace capsense::cli
