#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>

#include "config.hpp"

namespace capsense::cli {

struct CommandOptions {
    std::string config_file;
    std::filesystem::path out_dir = "out";
    bool oracle = false;
    std::optional<FormulaMode> formula_mode;  // overrides the config
    std::optional<double> r2_min;
    std::set<std::string> formats{"csv", "json"};  // csv | json | svg
};

// search found no feasible design; maps to exit code 4.
class infeasible_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void cmd_deflect(const CommandOptions& options);
void cmd_cap_curve(const CommandOptions& options);
void cmd_modes(const CommandOptions& options);
void cmd_touch_curve(const CommandOptions& options);
void cmd_sweep(const CommandOptions& options);
void cmd_search(const CommandOptions& options);
void cmd_oracle(const CommandOptions& options);
void cmd_spl(const CommandOptions& options, std::optional<double> db, std::optional<double> pa);

// Applies CLI overrides onto a parsed config.
SensorConfig apply_overrides(SensorConfig config, const CommandOptions& options);

}  // namespace capsense::cli
