// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exits nonzero if any line fails.
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "capsense/acoustics.hpp"
#include "capsense/cantilever.hpp"
#include "capsense/capacitance.hpp"
#include "capsense/fd_oracle.hpp"
#include "capsense/metrics.hpp"
#include "capsense/plate.hpp"
#include "capsense/touch_mode.hpp"

using namespace capsense;

namespace {

int g_failures = 0;
std::string g_binary;

struct Criterion {
    explicit Criterion(std::string name) : name_(std::move(name)) {}

    void expect(bool ok, const std::string& detail) {
        if (!ok) {
            failed_ = true;
            details_ += (details_.empty() ? "" : "; ") + detail;
        } else {
            passed_ += (passed_.empty() ? "" : "; ") + detail;
        }
    }

    ~Criterion() {
        if (failed_) {
            ++g_failures;
            std::printf("[FAIL] %s: %s\n", name_.c_str(), details_.c_str());
        } else {
            std::printf("[PASS] %s%s%s\n", name_.c_str(), passed_.empty() ? "" : " — ",
                        passed_.c_str());
        }
        std::fflush(stdout);
    }

    std::string name_;
    std::string details_;
    std::string passed_;
    bool failed_ = false;
};

std::string fmt(const char* format, ...) {
    char buf[256];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

const Material kPolyimide(2.5e9, 0.34, 1420.0);

void criterion_1_circle_anchor() {
    Criterion c("1. circle anchor: oracle converges to P R^4/(64 D)");
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<int> grids{65, 129, 257};
    const fd::ConvergenceStudy study =
        fd::convergence_study(Shape{Circle{1.0}}, 1.0, 64.0, grids);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / 3.0;

    const double w257 = study.points.back().max_w;
    c.expect(std::abs(w257 - 1.0) < 0.02, fmt("257^2 rel err %.3e", w257 - 1.0));
    c.expect(std::abs(study.extrapolated - 1.0) < 0.002,
             fmt("extrapolated rel err %.2e", study.extrapolated - 1.0));
    c.expect(study.observed_order > 1.5 && study.observed_order < 2.5,
             fmt("observed order %.2f", study.observed_order));
    c.expect(seconds < 60.0, fmt("%.1f s mean per solve", seconds));
}

void criterion_2_square_pentagon() {
    Criterion c("2. square/pentagon oracle coefficients");
    const fd::FieldSolution square =
        fd::solve_plate(fd::GridPlate::with_nodes_across(Shape{Square{1.0}}, 257, 1.0, 1.0));
    c.expect(square.max_w > 0.00120 && square.max_w < 0.00135,
             fmt("square coefficient %.5e (printed 0.00133, textbook 0.00126)", square.max_w));
    const fd::FieldSolution pentagon =
        fd::solve_plate(fd::GridPlate::with_nodes_across(Shape{Pentagon{1.0}}, 257, 1.0, 1.0));
    const double gap = (pentagon.max_w - 0.0041) / 0.0041;
    c.expect(std::abs(gap) < 0.15,
             fmt("pentagon coefficient %.5e, %.1f%% off the printed 0.0041", pentagon.max_w,
                 100.0 * gap));
}

void criterion_3_ellipse_consistency() {
    Criterion c("3. ellipse consistency");
    const PlateConfig circle(DiaphragmGeometry(Circle{0.7}, 1.0), Material(12.0, 0.0, 1.0));
    const PlateConfig ellipse(DiaphragmGeometry(Ellipse{0.7, 0.7}, 1.0), Material(12.0, 0.0, 1.0));
    const double wc = max_deflection_small(circle, 5.0);
    const double we = max_deflection_small(ellipse, 5.0, FormulaMode::consistent);
    c.expect(std::abs(we - wc) <= 1e-12 * wc, fmt("a=b circle limit rel gap %.1e", (we - wc) / wc));

    for (const double ratio : {0.25, 0.5, 0.75}) {
        const double a = 1.0, b = ratio;
        const double closed =
            (std::pow(a, 4) * std::pow(b, 4)) /
            (8.0 * (3.0 * std::pow(a, 4) + 2.0 * a * a * b * b + 3.0 * std::pow(b, 4)));
        const fd::FieldSolution sol = fd::solve_plate(
            fd::GridPlate::with_nodes_across(Shape{Ellipse{a, b}}, 257, 1.0, 1.0));
        const double rel = (sol.max_w - closed) / closed;
        c.expect(std::abs(rel) < 0.03, fmt("b/a=%.2f oracle gap %.2f%%", ratio, 100.0 * rel));
    }
}

void criterion_4_shape_trend() {
    Criterion c("4. equal-area shape trend and nonlinearity ordering");
    // areas matched to the ellipse a = 2 cm, b = 0.5 cm; rectangle at the 4:1 aspect
    const double area = std::numbers::pi * 0.02 * 0.005;
    const double radius = std::sqrt(area / std::numbers::pi);
    const double square_side = std::sqrt(area);
    const double rect_b = std::sqrt(area / 4.0);
    const double pent_edge = std::sqrt(area / surface_area(Shape{Pentagon{1.0}}));

    // model ordering from the Table-1 formulas at matched rigidity
    const Material m(12.0, 0.0, 1.0);
    auto model = [&](Shape shape) {
        return max_deflection_small(PlateConfig(DiaphragmGeometry(std::move(shape), 1.0), m), 1.0);
    };
    const double wc = model(Circle{radius});
    const double we = model(Ellipse{0.02, 0.005});
    const double ws = model(Square{square_side});
    const double wr = model(Rectangle{4.0 * rect_b, rect_b});
    const double wp = model(Pentagon{pent_edge});
    c.expect(wc > we && wc > ws && wc > wr && wc > wp, "model: circle deflects most");
    c.expect(we > wr, "model: ellipse above rectangle");
    c.expect(wr < ws && wr < wp && wr < we, "model: rectangle deflects least");

    // oracle ordering at 129 nodes across
    auto oracle = [&](Shape shape) {
        return fd::solve_plate(fd::GridPlate::with_nodes_across(shape, 129, 1.0, 1.0)).max_w;
    };
    const double oc = oracle(Circle{radius});
    const double oe = oracle(Ellipse{0.02, 0.005});
    const double os = oracle(Square{square_side});
    const double orr = oracle(Rectangle{4.0 * rect_b, rect_b});
    const double op = oracle(Pentagon{pent_edge});
    c.expect(oc > oe && oc > os && oc > orr && oc > op, "oracle: circle deflects most");
    c.expect(oe > orr, "oracle: ellipse above rectangle");
    c.expect(orr < os && orr < op, "oracle: rectangle deflects least");

    // nonlinearity ordering on 0-40 Pa normal-mode curves (thicker foil keeps
    // both shapes well inside the pre-touch regime)
    const Material foil(2.5e9, 0.34, 1420.0);
    const double thickness = 100e-6;
    const SensorStack stack(50e-6, DielectricStack({{1e-6, 1.0}}));
    std::vector<double> pressures;
    for (int i = 0; i <= 40; ++i) pressures.push_back(static_cast<double>(i));

    const PlateConfig circle_cfg(DiaphragmGeometry(Circle{radius}, thickness), foil);
    const CPCurve circle_curve = capacitance_pressure_curve(circle_cfg, stack, pressures);
    const PlateConfig rect_cfg(DiaphragmGeometry(Rectangle{4.0 * rect_b, rect_b}, thickness),
                               foil);
    const CPCurve rect_curve =
        fd::capacitance_pressure_curve_oracle(rect_cfg, stack, pressures,
                                              FormulaMode::consistent, 129);
    const double nl_circle = nonlinearity(circle_curve, 0.0, 40.0);
    const double nl_rect = nonlinearity(rect_curve, 0.0, 40.0);
    c.expect(nl_circle > nl_rect,
             fmt("nonlinearity circle %.3e > rectangle %.3e", nl_circle, nl_rect));

    // full-pipeline delta-C at 40 Pa across the five equal-area shapes, oracle
    // profiles behind the non-circular curves
    auto delta_c = [&](Shape shape) {
        const PlateConfig cfg(DiaphragmGeometry(shape, thickness), foil);
        const CPCurve curve =
            is_circle(shape)
                ? capacitance_pressure_curve(cfg, stack, pressures)
                : fd::capacitance_pressure_curve_oracle(cfg, stack, pressures,
                                                        FormulaMode::consistent, 129);
        return curve.points.back().capacitance - curve.points.front().capacitance;
    };
    const double dc_circle = delta_c(Circle{radius});
    const double dc_ellipse = delta_c(Ellipse{0.02, 0.005});
    const double dc_square = delta_c(Square{square_side});
    const double dc_rect = delta_c(Rectangle{4.0 * rect_b, rect_b});
    const double dc_pent = delta_c(Pentagon{pent_edge});
    c.expect(dc_circle > dc_ellipse && dc_circle > dc_square && dc_circle > dc_rect &&
                 dc_circle > dc_pent,
             fmt("delta-C at 40 Pa: circle max (%.2e F)", dc_circle));
    c.expect(dc_rect < dc_square && dc_rect < dc_pent && dc_rect < dc_ellipse,
             fmt("delta-C at 40 Pa: rectangle min (%.2e F)", dc_rect));
}

void criterion_5_cantilever_modes() {
    Criterion c("5. cantilever modes and aspect-ratio family");
    const double x1 = characteristic_root(1);
    const double x2 = characteristic_root(2);
    c.expect(std::abs(x1 - 1.875104) < 1e-6, fmt("x1 = %.6f", x1));
    c.expect(std::abs(x2 - 4.694091) < 1e-6, fmt("x2 = %.6f", x2));
    c.expect(std::abs(1.0 + std::cos(x1) * std::cosh(x1)) < 1e-10, "x1 residual < 1e-10");
    c.expect(std::abs(1.0 + std::cos(x2) * std::cosh(x2)) < 1e-10, "x2 residual < 1e-10");

    const CantileverSpec any(0.012, 0.0125, 25e-6, kPolyimide);
    const auto freqs = mode_frequencies(any, 2);
    c.expect(std::abs(freqs[1] / freqs[0] - 6.2669) <= 1e-3,
             fmt("f2/f1 = %.5f", freqs[1] / freqs[0]));

    // equal-overlap-area family, 1.5 cm^2 at aspect ratios 1.5 / 1.0 / 0.67
    auto design = [](double aspect) {
        const double length = std::sqrt(1.5e-4 / aspect);
        return CantileverSpec(length, 1.5e-4 / length, 25e-6, kPolyimide);
    };
    const CantileverSpec d15 = design(1.5), d10 = design(1.0), d067 = design(0.67);
    const double f15 = mode_frequencies(d15, 1)[0];
    const double f10 = mode_frequencies(d10, 1)[0];
    const double f067 = mode_frequencies(d067, 1)[0];
    c.expect(f067 < f10 && f10 < f15, fmt("f1 ordering %.0f < %.0f < %.0f Hz", f067, f10, f15));
    c.expect(tip_deflection_static(d067, 1.0) > tip_deflection_static(d10, 1.0) &&
                 tip_deflection_static(d10, 1.0) > tip_deflection_static(d15, 1.0),
             "static tip deflection grows as aspect ratio falls");
    c.expect(response_time_proxy(d067) > response_time_proxy(d10) &&
                 response_time_proxy(d10) > response_time_proxy(d15),
             "1/f1 proxy grows as aspect ratio falls");
}

void criterion_6_capacitance_identities() {
    Criterion c("6. capacitance identities");
    const double radius = 0.012, gap = 425e-6;
    const PlateConfig plate(DiaphragmGeometry(Circle{radius}, 25e-6), kPolyimide);
    for (const double k : {0.1, 0.25, 0.5, 0.9}) {
        const DeflectionField field = deflection_profile_circular(plate, k * gap);
        const double closed = deflected_capacitance_circular(radius, gap, k * gap, 1.0);
        const double quad = deflected_capacitance_quadrature(field, plate.geometry.shape, gap, 1.0);
        c.expect(std::abs(quad - closed) <= 1e-8 * closed,
                 fmt("k=%.2f quadrature gap %.1e", k, (quad - closed) / closed));
    }
    const Shape pent = Shape{Pentagon{0.012}};
    const double c0 = vacuum_permittivity * surface_area(pent) / gap;
    DeflectionField zero{[](double, double) { return 0.0; }, 0.0};
    const double quad0 = deflected_capacitance_quadrature(zero, pent, gap, 1.0);
    c.expect(std::abs(quad0 - c0) <= 1e-9 * c0, fmt("W=0 identity gap %.1e", (quad0 - c0) / c0));
    const double offset = 0.37 * gap;
    DeflectionField flat{[offset](double, double) { return offset; }, offset};
    const double quad_flat = deflected_capacitance_quadrature(flat, pent, gap, 1.0);
    const double exact_flat = c0 * gap / (gap - offset);
    c.expect(std::abs(quad_flat - exact_flat) <= 1e-9 * exact_flat,
             fmt("rigid-offset identity gap %.1e", (quad_flat - exact_flat) / exact_flat));
}

void criterion_7_large_deflection() {
    Criterion c("7. large-deflection solver");
    // normalized cubic w^3 + w - 1 = 0
    const double h = std::sqrt(0.488);
    const Material m(12.0 / (h * h * h), 0.0, 1.0);
    const PlateConfig plate(DiaphragmGeometry(Circle{1.0}, h), m);
    const double w = max_deflection_large(plate, 64.0);
    const double cardano = std::cbrt(0.5 + std::sqrt(0.25 + 1.0 / 27.0)) +
                           std::cbrt(0.5 - std::sqrt(0.25 + 1.0 / 27.0));
    c.expect(std::abs(w - cardano) < 1e-9, fmt("cubic root %.9f (0.682328...)", w));

    const PlateConfig thin(DiaphragmGeometry(Circle{0.01}, 25e-6), kPolyimide);
    const double p_small = 0.02;
    const double w_lin = max_deflection_small(thin, p_small);
    const bool regime = w_lin / 25e-6 < 0.05;
    const double w_large = max_deflection_large(thin, p_small);
    c.expect(regime && std::abs(w_large - w_lin) <= 1e-3 * w_lin,
             fmt("small-deflection limit gap %.2e at W0/h=%.3f", (w_large - w_lin) / w_lin,
                 w_lin / 25e-6));
}

void criterion_8_touch_mode() {
    Criterion c("8. touch-mode structure");
    // single-touch paper geometry: R = 1.2 cm, d ~ 400 um
    const PlateConfig plate(DiaphragmGeometry(Circle{0.012}, 25e-6), kPolyimide);
    const TouchSensorConfig single(plate, 400e-6, DielectricStack({{25e-6, 3.4}}));
    const double tp = first_touch_pressure(single);
    const Region ladder[4] = {
        classify_region(single, 0.5 * tp), classify_region(single, 1.01 * tp),
        classify_region(single, touch_point_pressure(plate, 400e-6 / (0.75 * 0.75))),
        classify_region(single, 1.05 * touch_point_pressure(plate, 400e-6 / (0.19 * 0.19)))};
    c.expect(ladder[0] == Region::normal && ladder[1] == Region::transition &&
                 ladder[2] == Region::linear_touch && ladder[3] == Region::saturation,
             "four regions in order across the pressure ladder");

    const CPCurve sweep = touch_curve(
        single, 1.1 * touch_point_pressure(plate, 400e-6 / (0.19 * 0.19)), 1500);
    bool ordered = true;
    try {
        sweep.validate();
    } catch (const std::exception&) {
        ordered = false;
    }
    c.expect(ordered, "uniform sweep keeps labels ordered and C nondecreasing");
    auto jump = [&](double eps) {
        const double below = single_touch_capacitance(single, tp - eps).first;
        const double above = single_touch_capacitance(single, tp + eps).first;
        return std::abs(above - below) / below;
    };
    c.expect(jump(1e-8) < 1e-9 && jump(1e-5) / jump(1e-3) < 0.05,
             fmt("C(P) continuous through TP (limit gap %.1e)", jump(1e-8)));

    // double-touch paper geometry
    const PlateConfig dbl_plate(DiaphragmGeometry(Circle{0.013}, 25e-6), kPolyimide);
    const SensorStack dbl_stack(425e-6, DielectricStack({{15e-6, 3.4}}),
                                SensorStack::SecondCavity{2.5e-3, 26e-6, 3.4});
    const TouchSensorConfig dbl = TouchSensorConfig::from_stack(dbl_plate, dbl_stack);
    const double ratio = 2.5e-3 / 0.013;
    const double step_threshold = 425e-6 / std::pow(1.0 - ratio * ratio, 2);
    c.expect(std::abs(step_threshold - 458.3e-6) < 0.5e-6 && 451e-6 < step_threshold,
             fmt("landing thresholds 451 um < %.1f um", step_threshold * 1e6));
    const double tp1 = first_touch_pressure(dbl);
    const double tp2 = *second_touch_pressure(dbl);
    c.expect(tp1 < tp2, fmt("TP1 %.1f Pa < TP2 %.1f Pa", tp1, tp2));

    // wider linear range than the matched single-touch sensor
    const TouchSensorConfig matched(dbl_plate, 425e-6, DielectricStack({{15e-6, 3.4}}));
    const double p_max = 1.3 * touch_point_pressure(dbl_plate, (425e-6 + 26e-6) / (0.19 * 0.19));
    const CPCurve curve_single = touch_curve(matched, p_max, 2000);
    const CPCurve curve_double = touch_curve(dbl, p_max, 2000);
    auto linear_span = [](const CPCurve& curve) {
        double lo = 0.0, hi = 0.0;
        bool found = false;
        for (const auto& pt : curve.points)
            if (pt.region == Region::linear_touch) {
                if (!found) lo = pt.pressure;
                hi = pt.pressure;
                found = true;
            }
        return found ? hi - lo : 0.0;
    };
    const double span_single = linear_span(curve_single);
    const double span_double = linear_span(curve_double);
    c.expect(span_double > span_single,
             fmt("linear span %.2e Pa (double) > %.2e Pa (single)", span_double, span_single));
}

void criterion_9_metrics_oracle() {
    Criterion c("9. metrics window equality and nonlinearity value");
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> n_dist(10, 500);
    std::uniform_real_distribution<double> noise(-1.0, 1.0), kink(0.2, 0.8), curl(0.0, 3.0);
    int mismatches = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = n_dist(rng);
        const double split = kink(rng), bend = curl(rng);
        const double eps = std::pow(10.0, -4.0 * kink(rng));
        CPCurve curve;
        for (int i = 0; i < n; ++i) {
            const double t = static_cast<double>(i) / (n - 1);
            double v = t;
            if (t > split) v += bend * (t - split) * (t - split);
            v += eps * noise(rng);
            curve.points.push_back({t * 5e4, 1e-12 * (1.0 + v), Region::normal});
        }
        const auto fast = widest_linear_window(curve, 0.999);

        // exhaustive reference over every window
        auto r2_of = [&](int l, int r) {
            long double sx = 0, sy = 0;
            const int m = r - l + 1;
            for (int i = l; i <= r; ++i) {
                sx += curve.points[i].pressure;
                sy += curve.points[i].capacitance;
            }
            const long double mx = sx / m, my = sy / m;
            long double cxx = 0, cxy = 0, cyy = 0;
            for (int i = l; i <= r; ++i) {
                const long double dx = curve.points[i].pressure - mx;
                const long double dy = curve.points[i].capacitance - my;
                cxx += dx * dx;
                cxy += dx * dy;
                cyy += dy * dy;
            }
            if (cxx <= 0 || cyy <= 0) return 0.0;
            return std::min(1.0, std::max(0.0, static_cast<double>((cxy * cxy) / (cxx * cyy))));
        };
        int best_l = -1, best_r = -1;
        for (int l = 0; l < n; ++l)
            for (int r = l + 2; r < n; ++r)
                if (r2_of(l, r) >= 0.999 && (best_l < 0 || (r - l) > (best_r - best_l))) {
                    best_l = l;
                    best_r = r;
                }
        const bool match =
            fast.has_value() == (best_l >= 0) &&
            (!fast || (fast->p_lo == curve.points[best_l].pressure &&
                       fast->p_hi == curve.points[best_r].pressure));
        if (!match) ++mismatches;
    }
    c.expect(mismatches == 0, fmt("%d/100 randomized curves mismatched", mismatches));

    CPCurve parabola;
    for (int i = 0; i <= 100; ++i) {
        const double t = i / 100.0;
        parabola.points.push_back({t, t * t, Region::normal});
    }
    const double nl = nonlinearity(parabola, 0.0, 1.0);
    c.expect(std::abs(nl - 0.125) < 1e-3, fmt("nonlinearity(x^2) = %.6f", nl));
}

void criterion_10_spl() {
    Criterion c("10. SPL conversion");
    const double pa = spl_to_pressure(94.0);
    c.expect(std::abs(pa - 1.002) < 1e-3, fmt("94 dB -> %.6f Pa", pa));
    bool round_trip = true;
    for (int spl = 0; spl <= 140; ++spl)
        round_trip = round_trip &&
                     std::abs(pressure_to_spl(spl_to_pressure(spl)) - spl) <=
                         1e-12 * std::max(1.0, static_cast<double>(spl));
    c.expect(round_trip, "round-trip identity to 1e-12 over 0-140 dB");
}

void criterion_11_determinism() {
    Criterion c("11. byte-identical outputs across runs and thread counts");
    if (g_binary.empty()) {
        c.expect(false, "capsense binary path not supplied");
        return;
    }
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "capsense_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    {
        std::ofstream config(dir / "config.json");
        config << R"({
          "material": "PI",
          "geometry": { "shape": "circle", "radius": "13 mm", "thickness": "25 um" },
          "stack": {
            "gap": "425 um",
            "layers": [ { "thickness": "15 um", "relative_permittivity": 3.4 } ],
            "second_cavity": { "hole_radius": "2.5 mm", "step_depth": "26 um", "step_permittivity": 3.4 }
          },
          "pressure_range": { "min": 0, "max": "2 kPa", "points": 150 },
          "sweep": [ { "parameter": "geometry.radius", "from": "8 mm", "to": "14 mm", "steps": 7 } ]
        })";
    }
    auto run_with_threads = [&](const std::string& threads, const std::string& out) {
        const std::string command = "CAPSENSE_THREADS=" + threads + " " + g_binary +
                                    " sweep --config " + (dir / "config.json").string() +
                                    " --out " + (dir / out).string() + " 2> /dev/null && " +
                                    "CAPSENSE_THREADS=" + threads + " " + g_binary +
                                    " touch-curve --config " + (dir / "config.json").string() +
                                    " --out " + (dir / out).string() + " 2> /dev/null";
        return WEXITSTATUS(std::system(command.c_str())) == 0;
    };
    auto slurp = [](const fs::path& file) {
        std::ifstream in(file, std::ios::binary);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    };
    const bool ran = run_with_threads("1", "a") && run_with_threads("4", "b") &&
                     run_with_threads("1", "c");
    c.expect(ran, "three runs completed");
    if (!ran) return;
    for (const char* file : {"sweep.csv", "sweep.json", "touch_curve.csv", "touch_curve.json"}) {
        const std::string a = slurp(dir / "a" / file);
        c.expect(!a.empty() && a == slurp(dir / "b" / file) && a == slurp(dir / "c" / file),
                 std::string(file) + " identical");
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_binary = argv[1];
    criterion_1_circle_anchor();
    criterion_2_square_pentagon();
    criterion_3_ellipse_consistency();
    criterion_4_shape_trend();
    criterion_5_cantilever_modes();
    criterion_6_capacitance_identities();
    criterion_7_large_deflection();
    criterion_8_touch_mode();
    criterion_9_metrics_oracle();
    criterion_10_spl();
    criterion_11_determinism();
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
