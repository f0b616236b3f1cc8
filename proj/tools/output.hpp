#pragma once

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "capsense/cp_curve.hpp"
#include "capsense/metrics.hpp"

namespace capsense::cli {

// Pinned CSV dialect: UTF-8, comma separator, header row, '.' decimal,
// scientific notation with 9 significant digits.
std::string format_si(double value);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row);
};

void write_csv(const CsvTable& table, const std::filesystem::path& file);
void write_json(const nlohmann::ordered_json& document, const std::filesystem::path& file);

// Static curve plot: capacitance over pressure with region shading and
// touch-point markers.
void write_curve_svg(const CPCurve& curve, const std::string& title,
                     const std::filesystem::path& file);

nlohmann::ordered_json curve_metadata(const CPCurve& curve);

}  // namespace capsense::cli
