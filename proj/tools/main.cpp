#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "capsense/errors.hpp"
#include "commands.hpp"

namespace {

using capsense::cli::CommandOptions;
using capsense::cli::config_error;
using capsense::cli::infeasible_error;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitInfeasible = 4;

void emit_error(int code, const std::string& kind, const std::string& message,
                const std::string& path = "") {
    nlohmann::ordered_json error;
    error["error"]["code"] = code;
    error["error"]["kind"] = kind;
    if (!path.empty()) error["error"]["path"] = path;
    error["error"]["message"] = message;
    std::cerr << error.dump() << "\n";
}

struct RawOptions {
    std::string config_file;
    std::string out_dir = "out";
    bool oracle = false;
    std::string formula_mode;
    double r2_min = -1.0;
    std::string format;
};

void add_common(CLI::App* cmd, RawOptions& raw, bool needs_config = true) {
    auto* config = cmd->add_option("--config", raw.config_file, "JSON configuration file");
    if (needs_config) config->required();
    cmd->add_option("--out", raw.out_dir, "output directory (default: out)");
    cmd->add_flag("--oracle", raw.oracle, "add a finite-difference oracle comparison");
    cmd->add_option("--formula-mode", raw.formula_mode, "published-formula variant")
        ->check(CLI::IsMember({"paper-exact", "consistent"}));
    cmd->add_option("--r2-min", raw.r2_min, "linear-window R^2 threshold")
        ->check(CLI::Range(1e-6, 1.0));
    cmd->add_option("--format", raw.format, "output formats, comma separated (csv,json,svg)");
}

CommandOptions finalize(const RawOptions& raw) {
    CommandOptions options;
    options.config_file = raw.config_file;
    options.out_dir = raw.out_dir;
    options.oracle = raw.oracle;
    if (raw.formula_mode == "consistent")
        options.formula_mode = capsense::FormulaMode::consistent;
    else if (raw.formula_mode == "paper-exact")
        options.formula_mode = capsense::FormulaMode::paper_exact;
    if (raw.r2_min > 0.0) options.r2_min = raw.r2_min;
    if (!raw.format.empty()) {
        options.formats.clear();
        std::stringstream stream(raw.format);
        std::string item;
        while (std::getline(stream, item, ',')) {
            if (item != "csv" && item != "json" && item != "svg")
                throw config_error("cli.format", "unknown format '" + item + "'");
            options.formats.insert(item);
        }
        if (options.formats.empty())
            throw config_error("cli.format", "at least one format required");
    }
    return options;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"capsense: flexible capacitive pressure sensor modeling toolkit"};
    app.require_subcommand(1);

    RawOptions raw;
    double spl_db_value = 0.0, spl_pa_value = 0.0;

    auto* deflect = app.add_subcommand("deflect", "diaphragm or cantilever deflection report");
    add_common(deflect, raw);
    auto* cap = app.add_subcommand("cap-curve", "normal-mode capacitance-pressure curve");
    add_common(cap, raw);
    auto* modes = app.add_subcommand("modes", "cantilever mode frequencies and sweep");
    add_common(modes, raw);
    auto* touch = app.add_subcommand("touch-curve", "single or double touch-mode curve");
    add_common(touch, raw);
    auto* sweep = app.add_subcommand("sweep", "parameter-grid sweep with per-point metrics");
    add_common(sweep, raw);
    auto* search = app.add_subcommand("search", "constrained design search");
    add_common(search, raw);
    auto* oracle = app.add_subcommand("oracle", "finite-difference plate solve and convergence");
    add_common(oracle, raw);
    auto* spl = app.add_subcommand("spl", "sound pressure level conversion");
    add_common(spl, raw, /*needs_config=*/false);
    auto* spl_db_opt = spl->add_option("--db", spl_db_value, "sound pressure level to convert");
    auto* spl_pa_opt = spl->add_option("--pa", spl_pa_value, "pressure to convert to dB SPL");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        emit_error(kExitConfig, "cli", e.what());
        return kExitConfig;
    }

    try {
        const CommandOptions options = finalize(raw);
        if (deflect->parsed()) capsense::cli::cmd_deflect(options);
        if (cap->parsed()) capsense::cli::cmd_cap_curve(options);
        if (modes->parsed()) capsense::cli::cmd_modes(options);
        if (touch->parsed()) capsense::cli::cmd_touch_curve(options);
        if (sweep->parsed()) capsense::cli::cmd_sweep(options);
        if (search->parsed()) capsense::cli::cmd_search(options);
        if (oracle->parsed()) capsense::cli::cmd_oracle(options);
        if (spl->parsed()) {
            std::optional<double> db, pa;
            if (spl_db_opt->count() > 0) db = spl_db_value;
            if (spl_pa_opt->count() > 0) pa = spl_pa_value;
            capsense::cli::cmd_spl(options, db, pa);
        }
        return kExitOk;
    } catch (const config_error& e) {
        emit_error(kExitConfig, "config", e.what(), e.path());
        return kExitConfig;
    } catch (const capsense::wrong_geometry_error& e) {
        emit_error(kExitConfig, "config", e.what());
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        emit_error(kExitConfig, "config", e.what());
        return kExitConfig;
    } catch (const infeasible_error& e) {
        emit_error(kExitInfeasible, "infeasible", e.what());
        return kExitInfeasible;
    } catch (const capsense::numerical_error& e) {
        emit_error(kExitNumerical, "numerical", e.what());
        return kExitNumerical;
    } catch (const std::domain_error& e) {
        // touch-regime and resonance-proximity guards
        emit_error(kExitNumerical, "numerical", e.what());
        return kExitNumerical;
    } catch (const std::exception& e) {
        emit_error(kExitNumerical, "internal", e.what());
        return kExitNumerical;
    }
}
