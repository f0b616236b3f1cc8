#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <thread>

#include "capsense/cantilever.hpp"
#include "capsense/errors.hpp"
#include "capsense/fd_oracle.hpp"
#include "capsense/metrics.hpp"
#include "commands.hpp"
#include "output.hpp"
#include "report.hpp"

namespace capsense::cli {

namespace {

int thread_budget() {
    if (const char* env = std::getenv("CAPSENSE_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Evaluates fn(i) for i in [0, n) across the thread budget; slot-indexed
// results keep the output independent of scheduling.
template <typename Fn>
void parallel_for(int n, Fn&& fn) {
    const int threads = std::min(thread_budget(), n);
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& worker : pool) worker.join();
    if (error) std::rethrow_exception(error);
}

struct PointMetrics {
    std::optional<double> w0;
    std::optional<double> c0;
    std::optional<double> sensitivity;
    std::optional<double> nonlinearity;
    std::optional<double> f1;
    std::optional<double> tp1;
    std::optional<double> tp2;
    std::optional<LinearFit> window;
    std::shared_ptr<const CPCurve> curve;
};

double reference_pressure_of(const SensorConfig& config) {
    if (config.load && std::holds_alternative<StaticLoad>(*config.load))
        return std::get<StaticLoad>(*config.load).pressure;
    if (config.pressure_range) return config.pressure_range->max;
    return 1.0;
}

bool touch_mode_requested(const SensorConfig& config) {
    if (config.mode == CurveMode::single_touch || config.mode == CurveMode::double_touch)
        return true;
    if (config.mode == CurveMode::normal) return false;
    if (!config.stack || !is_circle(config.geometry.shape)) return false;
    if (config.stack->second_cavity) return true;
    if (!config.pressure_range) return false;
    const double tp = touch_point_pressure(config.plate(), config.stack->gap);
    return config.pressure_range->max > tp;
}

std::vector<double> grid_pressures(const RangeSpec& range) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(range.points));
    for (int i = 0; i < range.points; ++i)
        out.push_back(range.min + (range.max - range.min) * i / (range.points - 1));
    return out;
}

PointMetrics evaluate_point(const SensorConfig& config) {
    PointMetrics metrics;
    const double p_ref = reference_pressure_of(config);

    if (is_cantilever(config.geometry.shape)) {
        const CantileverSpec spec = config.cantilever();
        metrics.f1 = mode_frequencies(spec, 1).front();
        metrics.w0 = tip_deflection_static(spec, p_ref);
        if (config.stack) {
            const double d_eff =
                config.stack->gap + config.stack->insulator_layers.effective_thickness();
            metrics.c0 = vacuum_permittivity * surface_area(config.geometry.shape) / d_eff;
        }
        return metrics;
    }

    const PlateConfig plate = config.plate();
    const bool circular = is_circle(config.geometry.shape);
    metrics.w0 = circular ? max_deflection_large(plate, p_ref)
                          : max_deflection_small(plate, p_ref, config.formula_mode);
    if (!config.stack) return metrics;

    const SensorStack& stack = *config.stack;
    const double d_eff = stack.gap + stack.insulator_layers.effective_thickness();
    metrics.c0 = vacuum_permittivity * surface_area(config.geometry.shape) / d_eff;
    if (circular) metrics.tp1 = touch_point_pressure(plate, stack.gap);

    if (!config.pressure_range) return metrics;
    const RangeSpec& range = *config.pressure_range;

    CPCurve curve;
    if (touch_mode_requested(config)) {
        const bool twin =
            config.mode == CurveMode::double_touch ||
            (config.mode == CurveMode::automatic && stack.second_cavity.has_value());
        SensorStack effective = stack;
        if (!twin) effective.second_cavity.reset();
        const TouchSensorConfig sensor =
            TouchSensorConfig::from_stack(plate, effective, config.thresholds);
        curve = touch_curve(sensor, range.max, range.points);
        metrics.tp1 = *curve.touch_pressure_1;
        if (curve.touch_pressure_2) metrics.tp2 = *curve.touch_pressure_2;
    } else {
        const auto pressures = grid_pressures(range);
        if (circular || config.profile == ProfileSource::assumed)
            curve = capacitance_pressure_curve(plate, stack, pressures, config.formula_mode);
        else
            curve = fd::capacitance_pressure_curve_oracle(
                plate, stack, pressures, config.formula_mode, config.oracle_nodes);
    }
    if (curve.points.size() >= 2) {
        const double lo = curve.points.front().pressure;
        const double hi = curve.points.back().pressure;
        metrics.sensitivity = sensitivity(curve, lo, hi);
        metrics.nonlinearity = nonlinearity(curve, lo, hi);
        if (curve.points.size() >= 3) metrics.window = widest_linear_window(curve, config.r2_min);
    }
    metrics.curve = std::make_shared<CPCurve>(std::move(curve));
    return metrics;
}

std::string cell(const std::optional<double>& value) {
    return value ? format_si(*value) : std::string();
}

}  // namespace

void cmd_sweep(const CommandOptions& options) {
    const LoadedConfig loaded = load_config(options.config_file);
    const SensorConfig base = apply_overrides(loaded.config, options);
    if (base.sweep.empty())
        throw config_error("config.sweep", "required for the sweep command");

    // cartesian grid, last dimension fastest
    std::vector<int> shape;
    int total = 1;
    for (const auto& dim : base.sweep) {
        shape.push_back(dim.steps);
        total *= dim.steps;
    }

    auto values_at = [&](int flat) {
        std::vector<double> values(base.sweep.size());
        for (int d = static_cast<int>(base.sweep.size()) - 1; d >= 0; --d) {
            const auto& dim = base.sweep[d];
            const int idx = flat % shape[d];
            flat /= shape[d];
            values[d] =
                dim.steps == 1 ? dim.from : dim.from + (dim.to - dim.from) * idx / (dim.steps - 1);
        }
        return values;
    };

    std::vector<PointMetrics> results(total);
    std::vector<std::vector<double>> points(total);
    parallel_for(total, [&](int i) {
        const std::vector<double> values = values_at(i);
        json document = loaded.document;
        for (std::size_t d = 0; d < base.sweep.size(); ++d)
            document = set_config_value(document, base.sweep[d].parameter, values[d],
                                        "config.sweep[" + std::to_string(d) + "]");
        const SensorConfig point = apply_overrides(parse_config(document), options);
        points[i] = values;
        results[i] = evaluate_point(point);
        results[i].curve.reset();  // rows only; curves are per-point scratch
    });

    CsvTable table;
    for (const auto& dim : base.sweep) {
        std::string name = dim.parameter;
        std::replace(name.begin(), name.end(), '.', '_');
        table.header.push_back(name);
    }
    for (const char* metric :
         {"w0_m", "c0_f", "sensitivity_f_per_pa", "nonlinearity", "f1_hz", "tp1_pa", "tp2_pa"})
        table.header.push_back(metric);
    for (int i = 0; i < total; ++i) {
        std::vector<std::string> row;
        for (const double v : points[i]) row.push_back(format_si(v));
        const PointMetrics& m = results[i];
        row.push_back(cell(m.w0));
        row.push_back(cell(m.c0));
        row.push_back(cell(m.sensitivity));
        row.push_back(cell(m.nonlinearity));
        row.push_back(cell(m.f1));
        row.push_back(cell(m.tp1));
        row.push_back(cell(m.tp2));
        table.add_row(std::move(row));
    }

    json report;
    report["command"] = "sweep";
    report["material"] = material_json(base);
    report["grid_points"] = total;
    json dims = json::array();
    for (const auto& dim : base.sweep) {
        json d;
        d["parameter"] = dim.parameter;
        d["from"] = dim.from;
        d["to"] = dim.to;
        d["steps"] = dim.steps;
        dims.push_back(d);
    }
    report["dimensions"] = dims;

    if (options.formats.count("csv")) write_csv(table, options.out_dir / "sweep.csv");
    if (options.formats.count("json")) write_json(report, options.out_dir / "sweep.json");
}

namespace {

struct SearchSample {
    std::vector<double> values;
    double objective = 0.0;  // maximized; nonlinearity enters negated
    bool feasible = false;
    bool valid = false;
};

struct SearchEngine {
    const LoadedConfig& loaded;
    const CommandOptions& options;
    const SearchSpec& spec;
    std::vector<SearchSample> audit;  // appended in deterministic order only

    SensorConfig configure(const std::vector<double>& values) const {
        json document = loaded.document;
        for (std::size_t d = 0; d < spec.dimensions.size(); ++d)
            document = set_config_value(document, spec.dimensions[d].parameter, values[d],
                                        "config.search.dimensions[" + std::to_string(d) + "]");
        return apply_overrides(parse_config(document), options);
    }

    SearchSample evaluate(const std::vector<double>& values) const {
        SearchSample sample;
        sample.values = values;
        const SensorConfig config = configure(values);
        const PointMetrics metrics = evaluate_point(config);

        sample.feasible = true;
        for (const auto& constraint : spec.constraints) {
            if (constraint.kind == SearchConstraint::Kind::linear_window_covers) {
                sample.feasible = sample.feasible && metrics.window &&
                                  metrics.window->p_lo <= constraint.p_lo &&
                                  metrics.window->p_hi >= constraint.p_hi;
            } else {
                sample.feasible =
                    sample.feasible && metrics.tp1 &&
                    !(*metrics.tp1 >= constraint.p_lo && *metrics.tp1 <= constraint.p_hi);
            }
        }

        // objective over the search window when given, else the full curve
        double value = 0.0;
        bool have_value = false;
        if (metrics.curve && metrics.curve->points.size() >= 2) {
            const double lo =
                spec.window ? spec.window->min : metrics.curve->points.front().pressure;
            const double hi =
                spec.window ? spec.window->max : metrics.curve->points.back().pressure;
            try {
                value = spec.objective == SearchSpec::Objective::max_sensitivity
                            ? sensitivity(*metrics.curve, lo, hi)
                            : -nonlinearity(*metrics.curve, lo, hi);
                have_value = true;
            } catch (const std::invalid_argument&) {
                have_value = false;  // window missed the sampled curve
            }
        }
        if (!have_value) sample.feasible = false;
        sample.objective = value;
        sample.valid = true;
        return sample;
    }

    // larger objective wins; ties prefer the smaller geometry
    static bool better(const SearchSample& a, const SearchSample& b) {
        if (!b.valid || !b.feasible) return a.valid && a.feasible;
        if (!a.valid || !a.feasible) return false;
        if (a.objective != b.objective) return a.objective > b.objective;
        double sa = 0, sb = 0;
        for (double v : a.values) sa += v;
        for (double v : b.values) sb += v;
        if (sa != sb) return sa < sb;
        return a.values < b.values;
    }
};

}  // namespace

void cmd_search(const CommandOptions& options) {
    const LoadedConfig loaded = load_config(options.config_file);
    const SensorConfig base = apply_overrides(loaded.config, options);
    if (!base.search) throw config_error("config.search", "required for the search command");
    const SearchSpec& spec = *base.search;

    SearchEngine engine{loaded, options, spec, {}};

    // stage 1: full grid, evaluated in parallel, recorded in grid order
    std::vector<int> shape;
    int total = 1;
    for (const auto& dim : spec.dimensions) {
        shape.push_back(dim.grid);
        total *= dim.grid;
    }
    auto grid_values = [&](int flat) {
        std::vector<double> values(spec.dimensions.size());
        for (int d = static_cast<int>(spec.dimensions.size()) - 1; d >= 0; --d) {
            const auto& dim = spec.dimensions[d];
            const int idx = flat % shape[d];
            flat /= shape[d];
            values[d] =
                dim.grid == 1 ? dim.min : dim.min + (dim.max - dim.min) * idx / (dim.grid - 1);
        }
        return values;
    };

    std::vector<SearchSample> grid(total);
    parallel_for(total, [&](int i) { grid[i] = engine.evaluate(grid_values(i)); });
    engine.audit.insert(engine.audit.end(), grid.begin(), grid.end());

    SearchSample best;
    for (const auto& sample : grid)
        if (SearchEngine::better(sample, best)) best = sample;
    if (!best.valid || !best.feasible)
        throw infeasible_error("search: no grid point satisfies the constraints");

    // stage 2: coordinate-wise golden-section refinement around the incumbent
    constexpr double golden = 0.6180339887498949;
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t d = 0; d < spec.dimensions.size(); ++d) {
            const auto& dim = spec.dimensions[d];
            const double step =
                dim.grid > 1 ? (dim.max - dim.min) / (dim.grid - 1) : (dim.max - dim.min);
            double lo = std::max(dim.min, best.values[d] - step);
            double hi = std::min(dim.max, best.values[d] + step);
            auto probe = [&](double v) {
                std::vector<double> values = best.values;
                values[d] = v;
                SearchSample sample = engine.evaluate(values);
                engine.audit.push_back(sample);
                return sample;
            };
            double m1 = hi - golden * (hi - lo), m2 = lo + golden * (hi - lo);
            SearchSample s1 = probe(m1), s2 = probe(m2);
            for (int it = 0; it < spec.refine_iterations; ++it) {
                if (SearchEngine::better(s1, s2)) {
                    hi = m2;
                    m2 = m1;
                    s2 = s1;
                    m1 = hi - golden * (hi - lo);
                    s1 = probe(m1);
                } else {
                    lo = m1;
                    m1 = m2;
                    s1 = s2;
                    m2 = lo + golden * (hi - lo);
                    s2 = probe(m2);
                }
            }
            for (const auto& candidate : {s1, s2})
                if (SearchEngine::better(candidate, best)) best = candidate;
        }
    }

    // re-evaluation gate before emission
    const SearchSample confirmed = engine.evaluate(best.values);
    if (!confirmed.feasible)
        throw infeasible_error("search: best candidate failed constraint re-evaluation");

    json report;
    report["command"] = "search";
    report["objective"] = spec.objective == SearchSpec::Objective::max_sensitivity
                              ? "max_sensitivity"
                              : "min_nonlinearity";
    json dims = json::array();
    for (std::size_t d = 0; d < spec.dimensions.size(); ++d) {
        json entry;
        entry["parameter"] = spec.dimensions[d].parameter;
        entry["value"] = confirmed.values[d];
        dims.push_back(entry);
    }
    report["best"] = dims;
    report["objective_value"] = spec.objective == SearchSpec::Objective::max_sensitivity
                                    ? confirmed.objective
                                    : -confirmed.objective;
    report["evaluations"] = engine.audit.size() + 1;

    const SensorConfig best_config = engine.configure(confirmed.values);
    const PointMetrics best_metrics = evaluate_point(best_config);
    json verification;
    if (best_metrics.sensitivity) verification["sensitivity_f_per_pa"] = *best_metrics.sensitivity;
    if (best_metrics.nonlinearity) verification["nonlinearity"] = *best_metrics.nonlinearity;
    if (best_metrics.tp1) verification["tp1_pa"] = *best_metrics.tp1;
    if (best_metrics.tp2) verification["tp2_pa"] = *best_metrics.tp2;
    if (best_metrics.window) {
        verification["linear_window_p_lo_pa"] = best_metrics.window->p_lo;
        verification["linear_window_p_hi_pa"] = best_metrics.window->p_hi;
    }
    report["verification"] = verification;

    CsvTable table;
    for (const auto& dim : spec.dimensions) {
        std::string name = dim.parameter;
        std::replace(name.begin(), name.end(), '.', '_');
        table.header.push_back(name);
    }
    table.header.push_back("objective");
    table.header.push_back("feasible");
    for (const auto& sample : engine.audit) {
        std::vector<std::string> row;
        for (const double v : sample.values) row.push_back(format_si(v));
        row.push_back(format_si(sample.objective));
        row.push_back(sample.feasible ? "1" : "0");
        table.add_row(std::move(row));
    }

    if (options.formats.count("csv")) write_csv(table, options.out_dir / "search_audit.csv");
    if (options.formats.count("json")) write_json(report, options.out_dir / "search.json");
}

}  // namespace capsense::cli
