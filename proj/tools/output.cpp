#include "output.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace capsense::cli {

std::string format_si(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.8e", value);
    return buf;
}

void CsvTable::add_row(std::vector<std::string> row) {
    if (row.size() != header.size())
        throw std::logic_error("CsvTable: row width does not match header");
    rows.push_back(std::move(row));
}

namespace {

std::ofstream open_file(const std::filesystem::path& file) {
    std::filesystem::create_directories(file.parent_path());
    std::ofstream out(file, std::ios::binary);  // binary keeps line endings stable
    if (!out) throw std::runtime_error("cannot write '" + file.string() + "'");
    return out;
}

}  // namespace

void write_csv(const CsvTable& table, const std::filesystem::path& file) {
    std::ofstream out = open_file(file);
    for (std::size_t i = 0; i < table.header.size(); ++i)
        out << (i ? "," : "") << table.header[i];
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << "\n";
    }
}

void write_json(const nlohmann::ordered_json& document, const std::filesystem::path& file) {
    std::ofstream out = open_file(file);
    out << document.dump(2) << "\n";
}

nlohmann::ordered_json curve_metadata(const CPCurve& curve) {
    nlohmann::ordered_json meta;
    meta["summary"] = curve.config_summary;
    meta["points"] = curve.points.size();
    if (!curve.points.empty()) {
        meta["pressure_min_pa"] = curve.points.front().pressure;
        meta["pressure_max_pa"] = curve.points.back().pressure;
        meta["capacitance_min_f"] = curve.points.front().capacitance;
        meta["capacitance_max_f"] = curve.points.back().capacitance;
    }
    if (curve.touch_pressure_1) meta["touch_pressure_1_pa"] = *curve.touch_pressure_1;
    if (curve.touch_pressure_2) meta["touch_pressure_2_pa"] = *curve.touch_pressure_2;
    return meta;
}

void write_curve_svg(const CPCurve& curve, const std::string& title,
                     const std::filesystem::path& file) {
    constexpr double width = 840, height = 520;
    constexpr double ml = 90, mr = 30, mt = 50, mb = 60;
    const double plot_w = width - ml - mr, plot_h = height - mt - mb;

    double p_lo = 0, p_hi = 1, c_lo = 0, c_hi = 1;
    if (!curve.points.empty()) {
        p_lo = curve.points.front().pressure;
        p_hi = curve.points.back().pressure;
        c_lo = curve.points.front().capacitance;
        c_hi = c_lo;
        for (const auto& pt : curve.points) {
            c_lo = std::min(c_lo, pt.capacitance);
            c_hi = std::max(c_hi, pt.capacitance);
        }
    }
    if (p_hi <= p_lo) p_hi = p_lo + 1;
    if (c_hi <= c_lo) c_hi = c_lo + 1;

    auto x_of = [&](double p) { return ml + (p - p_lo) / (p_hi - p_lo) * plot_w; };
    auto y_of = [&](double c) { return mt + plot_h - (c - c_lo) / (c_hi - c_lo) * plot_h; };
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", v);
        return std::string(buf);
    };

    std::ofstream out = open_file(file);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

    // region shading: one band per contiguous label run
    static const char* fills[4] = {"#f4f7fb", "#fdf2d9", "#e7f6e7", "#fbe4e4"};
    std::size_t start = 0;
    for (std::size_t i = 1; i <= curve.points.size(); ++i) {
        if (i == curve.points.size() || curve.points[i].region != curve.points[start].region) {
            const double x0 = x_of(curve.points[start].pressure);
            const double x1 = x_of(curve.points[i - 1].pressure);
            out << "<rect x=\"" << num(x0) << "\" y=\"" << num(mt) << "\" width=\""
                << num(std::max(x1 - x0, 0.5)) << "\" height=\"" << num(plot_h) << "\" fill=\""
                << fills[static_cast<int>(curve.points[start].region)] << "\"/>\n";
            start = i;
        }
    }

    // axes
    out << "<line x1=\"" << num(ml) << "\" y1=\"" << num(mt + plot_h) << "\" x2=\""
        << num(ml + plot_w) << "\" y2=\"" << num(mt + plot_h)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "<line x1=\"" << num(ml) << "\" y1=\"" << num(mt) << "\" x2=\"" << num(ml)
        << "\" y2=\"" << num(mt + plot_h) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    // touch-point markers
    for (const auto& tp : {curve.touch_pressure_1, curve.touch_pressure_2}) {
        if (!tp || *tp < p_lo || *tp > p_hi) continue;
        out << "<line x1=\"" << num(x_of(*tp)) << "\" y1=\"" << num(mt) << "\" x2=\""
            << num(x_of(*tp)) << "\" y2=\"" << num(mt + plot_h)
            << "\" stroke=\"#b02a2a\" stroke-width=\"1\" stroke-dasharray=\"5,4\"/>\n";
    }

    // curve polyline
    if (!curve.points.empty()) {
        out << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
        for (const auto& pt : curve.points)
            out << num(x_of(pt.pressure)) << "," << num(y_of(pt.capacitance)) << " ";
        out << "\"/>\n";
    }

    // labels
    out << "<text x=\"" << num(ml) << "\" y=\"28\" font-family=\"sans-serif\" font-size=\"16\">"
        << title << "</text>\n";
    out << "<text x=\"" << num(ml + plot_w / 2) << "\" y=\"" << num(height - 18)
        << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">pressure [Pa] "
        << format_si(p_lo) << " to " << format_si(p_hi) << "</text>\n";
    out << "<text x=\"22\" y=\"" << num(mt + plot_h / 2)
        << "\" font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 22 "
        << num(mt + plot_h / 2) << ")\" text-anchor=\"middle\">capacitance [F] "
        << format_si(c_lo) << " to " << format_si(c_hi) << "</text>\n";
    out << "</svg>\n";
}

}  // namespace capsense::cli
