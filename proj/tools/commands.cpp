#include "commands.hpp"

#include <cmath>
#include <iostream>

#include <fstream>

#include "capsense/acoustics.hpp"
#include "capsense/cantilever.hpp"
#include "capsense/errors.hpp"
#include "capsense/fd_oracle.hpp"
#include "capsense/metrics.hpp"
#include "output.hpp"
#include "report.hpp"

namespace capsense::cli {

namespace {

std::vector<double> range_pressures(const RangeSpec& range) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(range.points));
    for (int i = 0; i < range.points; ++i)
        out.push_back(range.min + (range.max - range.min) * i / (range.points - 1));
    return out;
}

const RangeSpec& require_pressure_range(const SensorConfig& config) {
    if (!config.pressure_range)
        throw config_error("config.pressure_range", "required for this command");
    return *config.pressure_range;
}

const SensorStack& require_stack(const SensorConfig& config) {
    if (!config.stack) throw config_error("config.stack", "required for this command");
    return *config.stack;
}

}  // namespace

SensorConfig apply_overrides(SensorConfig config, const CommandOptions& options) {
    if (options.formula_mode) config.formula_mode = *options.formula_mode;
    if (options.r2_min) config.r2_min = *options.r2_min;
    return config;
}

void cmd_deflect(const CommandOptions& options) {
    const SensorConfig config = apply_overrides(load_config_file(options.config_file), options);

    std::vector<double> pressures;
    if (config.pressure_range) {
        pressures = range_pressures(*config.pressure_range);
    } else if (config.load && std::holds_alternative<StaticLoad>(*config.load)) {
        pressures = {std::get<StaticLoad>(*config.load).pressure};
    } else {
        throw config_error("config", "deflect needs pressure_range or a static load");
    }

    json report;
    report["command"] = "deflect";
    report["material"] = material_json(config);
    report["geometry"] = geometry_json(config);

    CsvTable table;
    if (is_cantilever(config.geometry.shape)) {
        const CantileverSpec spec = config.cantilever();
        report["beam_rigidity_nm2"] = spec.rigidity();
        table.header = {"pressure_pa", "tip_deflection_m"};
        if (options.oracle) table.header.push_back("oracle_tip_m");
        for (const double p : pressures) {
            std::vector<std::string> row{format_si(p), format_si(tip_deflection_static(spec, p))};
            if (options.oracle)
                row.push_back(format_si(fd::solve_beam(spec, p * spec.width, 10000)));
            table.add_row(std::move(row));
        }
    } else {
        const PlateConfig plate = config.plate();
        report["flexural_rigidity_nm"] = plate.rigidity();
        report["formula_mode"] =
            config.formula_mode == FormulaMode::consistent ? "consistent" : "paper-exact";

        const bool circular = is_circle(config.geometry.shape);
        const bool dual = std::holds_alternative<Ellipse>(config.geometry.shape) ||
                          std::holds_alternative<Rectangle>(config.geometry.shape);
        table.header = {"pressure_pa"};
        if (circular) {
            table.header.push_back("w0_small_m");
            table.header.push_back("w0_large_m");
        } else if (dual) {
            table.header.push_back("w0_paper_exact_m");
            table.header.push_back("w0_consistent_m");
        } else {
            table.header.push_back("w0_m");
        }

        std::optional<fd::FieldSolution> unit_solution;
        if (options.oracle) {
            table.header.push_back("oracle_w0_m");
            table.header.push_back("oracle_rel_gap");
            const fd::GridPlate grid = fd::GridPlate::with_nodes_across(
                config.geometry.shape, config.oracle_nodes, 1.0, 1.0);
            unit_solution = fd::solve_plate(grid);
            json oracle;
            oracle["nodes_across"] = config.oracle_nodes;
            oracle["spacing_m"] = unit_solution->spacing;
            oracle["relative_residual"] = unit_solution->residual;
            oracle["iterations"] = unit_solution->iterations;
            report["oracle"] = oracle;
        }

        for (const double p : pressures) {
            std::vector<std::string> row{format_si(p)};
            double reference;
            if (circular) {
                reference = max_deflection_small(plate, p, config.formula_mode);
                row.push_back(format_si(reference));
                row.push_back(format_si(max_deflection_large(plate, p)));
            } else if (dual) {
                row.push_back(format_si(max_deflection_small(plate, p, FormulaMode::paper_exact)));
                reference = max_deflection_small(plate, p, FormulaMode::consistent);
                row.push_back(format_si(reference));
            } else {
                reference = max_deflection_small(plate, p, config.formula_mode);
                row.push_back(format_si(reference));
            }
            if (options.oracle) {
                const double oracle_w0 = unit_solution->max_w * p / plate.rigidity();
                row.push_back(format_si(oracle_w0));
                row.push_back(format_si(
                    reference > 0.0 ? (oracle_w0 - reference) / reference : 0.0));
            }
            table.add_row(std::move(row));
        }
    }

    report["rows"] = table.rows.size();
    if (options.formats.count("csv")) write_csv(table, options.out_dir / "deflect.csv");
    if (options.formats.count("json")) write_json(report, options.out_dir / "deflect.json");
}

namespace {

CPCurve normal_mode_curve(const SensorConfig& config, const std::vector<double>& pressures) {
    const PlateConfig plate = config.plate();
    const SensorStack& stack = require_stack(config);
    if (is_circle(config.geometry.shape) || config.profile == ProfileSource::assumed)
        return capacitance_pressure_curve(plate, stack, pressures, config.formula_mode);
    return fd::capacitance_pressure_curve_oracle(plate, stack, pressures, config.formula_mode,
                                                 config.oracle_nodes);
}

}  // namespace

void cmd_cap_curve(const CommandOptions& options) {
    const SensorConfig config = apply_overrides(load_config_file(options.config_file), options);
    if (is_cantilever(config.geometry.shape))
        throw config_error("config.geometry", "cap-curve models clamped diaphragms");
    const RangeSpec& range = require_pressure_range(config);

    const CPCurve curve = normal_mode_curve(config, range_pressures(range));

    CsvTable table;
    table.header = {"pressure_pa", "capacitance_f", "region"};
    for (const auto& pt : curve.points)
        table.add_row({format_si(pt.pressure), format_si(pt.capacitance),
                       std::string(to_string(pt.region))});

    json report;
    report["command"] = "cap-curve";
    report["material"] = material_json(config);
    report["geometry"] = geometry_json(config);
    report["profile"] = config.profile == ProfileSource::oracle ? "oracle" : "assumed";
    report["curve"] = curve_metadata(curve);
    if (curve.points.size() >= 2) {
        report["sensitivity_f_per_pa"] =
            sensitivity(curve, curve.points.front().pressure, curve.points.back().pressure);
        report["nonlinearity"] =
            nonlinearity(curve, curve.points.front().pressure, curve.points.back().pressure);
    }

    if (options.formats.count("csv")) write_csv(table, options.out_dir / "cap_curve.csv");
    if (options.formats.count("json")) write_json(report, options.out_dir / "cap_curve.json");
    if (options.formats.count("svg"))
        write_curve_svg(curve, "normal-mode capacitance", options.out_dir / "cap_curve.svg");
}

void cmd_modes(const CommandOptions& options) {
    const SensorConfig config = apply_overrides(load_config_file(options.config_file), options);
    const CantileverSpec spec = config.cantilever();

    const auto frequencies = mode_frequencies(spec, config.n_modes);
    json report;
    report["command"] = "modes";
    report["material"] = material_json(config);
    report["geometry"] = geometry_json(config);
    report["aspect_ratio"] = spec.aspect_ratio();
    report["mode_frequencies_hz"] = frequencies;
    if (frequencies.size() >= 2) report["f2_over_f1"] = frequencies[1] / frequencies[0];
    report["response_time_proxy_s"] = response_time_proxy(spec);

    // amplitude sweep, log-spaced over the audio band by default
    const double f_lo = config.frequency_range ? config.frequency_range->min : 20.0;
    const double f_hi = config.frequency_range ? config.frequency_range->max : 20e3;
    const int points = config.frequency_range ? config.frequency_range->points : 600;
    double amplitude = 1.0;
    if (config.load && std::holds_alternative<HarmonicLoad>(*config.load))
        amplitude = std::get<HarmonicLoad>(*config.load).amplitude;

    CsvTable table;
    table.header = {"frequency_hz", "tip_amplitude_m"};
    for (int i = 0; i < points; ++i) {
        const double f =
            f_lo * std::pow(f_hi / f_lo, static_cast<double>(i) / (points - 1));
        std::string cell;
        try {
            cell = format_si(harmonic_amplitude(spec, spec.length, HarmonicLoad(amplitude, f)));
        } catch (const resonance_proximity_error&) {
            cell = "";  // undamped model refuses evaluation on top of a mode
        }
        table.add_row({format_si(f), std::move(cell)});
    }

    if (options.formats.count("csv")) write_csv(table, options.out_dir / "modes_sweep.csv");
    if (options.formats.count("json")) write_json(report, options.out_dir / "modes.json");
}

namespace {

TouchSensorConfig touch_config(const SensorConfig& config, bool want_double) {
    const SensorStack& stack = require_stack(config);
    if (want_double && !stack.second_cavity)
        throw config_error("config.stack.second_cavity", "required for double touch");
    SensorStack effective = stack;
    if (!want_double) effective.second_cavity.reset();
    return TouchSensorConfig::from_stack(config.plate(), effective, config.thresholds);
}

bool resolve_double(const SensorConfig& config) {
    switch (config.mode) {
        case CurveMode::double_touch: return true;
        case CurveMode::single_touch: return false;
        case CurveMode::normal:
            throw config_error("config.mode", "touch-curve needs a touch mode");
        case CurveMode::automatic: break;
    }
    return config.stack && config.stack->second_cavity.has_value();
}

}  // namespace

void cmd_touch_curve(const CommandOptions& options) {
    const SensorConfig config = apply_overrides(load_config_file(options.config_file), options);
    const RangeSpec& range = require_pressure_range(config);
    if (range.min != 0.0)
        throw config_error("config.pressure_range.min", "touch curves sweep from 0");

    const bool twin = resolve_double(config);
    const TouchSensorConfig sensor = touch_config(config, twin);
    const CPCurve curve = touch_curve(sensor, range.max, range.points);

    CsvTable table;
    table.header = {"pressure_pa", "capacitance_f", "region"};
    for (const auto& pt : curve.points)
        table.add_row({format_si(pt.pressure), format_si(pt.capacitance),
                       std::string(to_string(pt.region))});

    json report;
    report["command"] = "touch-curve";
    report["mode"] = twin ? "double_touch" : "single_touch";
    report["material"] = material_json(config);
    report["geometry"] = geometry_json(config);
    report["curve"] = curve_metadata(curve);
    report["r2_min"] = config.r2_min;
    if (const auto window = widest_linear_window(curve, config.r2_min)) {
        json w;
        w["p_lo_pa"] = window->p_lo;
        w["p_hi_pa"] = window->p_hi;
        w["span_pa"] = window->p_hi - window->p_lo;
        w["slope_f_per_pa"] = window->slope;
        w["r_squared"] = window->r_squared;
        report["widest_linear_window"] = w;
    } else {
        report["widest_linear_window"] = nullptr;
    }

    if (options.formats.count("csv")) write_csv(table, options.out_dir / "touch_curve.csv");
    if (options.formats.count("json")) write_json(report, options.out_dir / "touch_curve.json");
    if (options.formats.count("svg"))
        write_curve_svg(curve, twin ? "double-touch capacitance" : "single-touch capacitance",
                        options.out_dir / "touch_curve.svg");
}

void cmd_spl(const CommandOptions& options, std::optional<double> db, std::optional<double> pa) {
    if (db.has_value() == pa.has_value())
        throw config_error("spl", "provide exactly one of --db or --pa");
    json report;
    report["command"] = "spl";
    report["reference_pressure_pa"] = reference_pressure;
    if (db) {
        report["spl_db"] = *db;
        report["pressure_pa"] = spl_to_pressure(*db);
    } else {
        if (!(*pa > 0.0)) throw config_error("spl", "--pa must be positive");
        report["pressure_pa"] = *pa;
        report["spl_db"] = pressure_to_spl(*pa);
    }
    std::cout << report.dump(2) << "\n";
    if (options.formats.count("json") && !options.out_dir.empty())
        write_json(report, options.out_dir / "spl.json");
}

void cmd_oracle(const CommandOptions& options) {
    const SensorConfig config = apply_overrides(load_config_file(options.config_file), options);
    if (is_cantilever(config.geometry.shape))
        throw config_error("config.geometry",
                           "oracle solves clamped plates; deflect --oracle covers beams");
    const PlateConfig plate = config.plate();

    double load = 1.0;
    if (config.load && std::holds_alternative<StaticLoad>(*config.load))
        load = std::get<StaticLoad>(*config.load).pressure;

    const fd::GridPlate grid = fd::GridPlate::with_nodes_across(
        config.geometry.shape, config.oracle_nodes, plate.rigidity(), load);
    const fd::FieldSolution solution = fd::solve_plate(grid);

    if (options.formats.count("csv")) {
        std::filesystem::create_directories(options.out_dir);
        std::ofstream field(options.out_dir / "field.csv", std::ios::binary);
        fd::write_field_csv(solution, field);
    }

    const fd::ConvergenceStudy study = fd::convergence_study(
        config.geometry.shape, plate.rigidity(), load, config.convergence_nodes);

    CsvTable conv;
    conv.header = {"spacing_m", "max_deflection_m"};
    for (const auto& point : study.points)
        conv.add_row({format_si(point.spacing), format_si(point.max_w)});
    if (options.formats.count("csv")) write_csv(conv, options.out_dir / "convergence.csv");

    json report;
    report["command"] = "oracle";
    report["material"] = material_json(config);
    report["geometry"] = geometry_json(config);
    report["load_pa"] = load;
    report["flexural_rigidity_nm"] = plate.rigidity();
    report["nodes_across"] = config.oracle_nodes;
    report["spacing_m"] = solution.spacing;
    report["max_deflection_m"] = solution.max_w;
    report["max_location_m"] = {solution.max_x, solution.max_y};
    report["relative_residual"] = solution.residual;
    report["iterations"] = solution.iterations;
    json conv_json;
    conv_json["nodes"] = config.convergence_nodes;
    conv_json["observed_order"] = study.observed_order;
    conv_json["extrapolated_max_deflection_m"] = study.extrapolated;
    report["convergence"] = conv_json;
    // analytic comparison where a closed form exists
    if (is_circle(config.geometry.shape)) {
        const double analytic = max_deflection_small(plate, load);
        report["analytic_max_deflection_m"] = analytic;
        report["extrapolated_rel_gap"] = (study.extrapolated - analytic) / analytic;
    }
    if (options.formats.count("json")) write_json(report, options.out_dir / "oracle_summary.json");
}

}  // namespace capsense::cli
