#include "capsense/fd_oracle.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

#include "capsense/errors.hpp"
#include "capsense/plate.hpp"
#include "capsense/quadrature.hpp"

namespace capsense::fd {

namespace {

constexpr double kResidualTarget = 1e-8;

// First boundary crossing along direction (ex, ey) from (x0, y0), in units of
// step; +inf when the ray stays inside past smax steps.
double crossing_distance(const Shape& shape, double x0, double y0, double ex, double ey,
                         double step, double smax = 3.0) {
    double lo = 0.0, hi = -1.0;
    for (double s = 0.125; s <= smax + 1e-9; s += 0.125) {
        if (!contains(shape, x0 + ex * s * step, y0 + ey * s * step)) {
            hi = s;
            break;
        }
        lo = s;
    }
    if (hi < 0.0) return std::numeric_limits<double>::infinity();
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (contains(shape, x0 + ex * mid * step, y0 + ey * mid * step) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Ghost weight of the anchor node for an outside node at lattice offset s
// along a line whose wall crossing sits at delta from the anchor: the profile
// vanishes to second order at the wall.
double ghost_weight(double s, double delta) {
    const double num = s - delta;
    return (num * num) / (delta * delta);
}

}  // namespace

GridPlate::GridPlate(Shape shape_in, double spacing_in, double rigidity_in, double load_in)
    : shape(make_shape(std::move(shape_in))), spacing(spacing_in), rigidity(rigidity_in),
      load(load_in) {
    if (is_cantilever(shape))
        throw wrong_geometry_error("GridPlate: cantilever geometry uses solve_beam");
    if (!(spacing > 0.0)) throw std::invalid_argument("GridPlate: spacing must be positive");
    if (!(rigidity > 0.0)) throw std::invalid_argument("GridPlate: rigidity must be positive");

    const auto he = half_extents(shape);
    mx = static_cast<int>(std::floor(he[0] / spacing + 1e-9)) + 2;
    my = static_cast<int>(std::floor(he[1] / spacing + 1e-9)) + 2;
    node.assign(static_cast<std::size_t>(2 * mx + 1) * (2 * my + 1), -1);

    const double clearance = 0.5 * spacing;
    for (int i = -mx; i <= mx; ++i) {
        for (int j = -my; j <= my; ++j) {
            const double x = i * spacing, y = j * spacing;
            const bool in = contains(shape, x, y) && contains(shape, x + clearance, y) &&
                            contains(shape, x - clearance, y) && contains(shape, x, y + clearance) &&
                            contains(shape, x, y - clearance);
            if (in) {
                node[static_cast<std::size_t>(i + mx) * (2 * my + 1) + (j + my)] =
                    interior_count++;
            }
        }
    }
    if (interior_count == 0)
        throw std::invalid_argument("GridPlate: spacing too coarse, no interior nodes");
}

GridPlate GridPlate::with_nodes_across(const Shape& shape, int nodes_across, double rigidity,
                                       double load) {
    if (nodes_across < 9)
        throw std::invalid_argument("GridPlate: need at least 9 nodes across");
    const auto he = half_extents(make_shape(shape));
    const double extent = std::max(he[0], he[1]);
    return GridPlate(shape, 2.0 * extent / (nodes_across - 1), rigidity, load);
}

bool GridPlate::interior(int i, int j) const { return interior_index(i, j) >= 0; }

int GridPlate::interior_index(int i, int j) const {
    if (i < -mx || i > mx || j < -my || j > my) return -1;
    return node[static_cast<std::size_t>(i + mx) * (2 * my + 1) + (j + my)];
}

FieldSolution solve_plate(const GridPlate& grid) {
    using SpMat = Eigen::SparseMatrix<double>;
    const int n = grid.interior_count;
    const double h = grid.spacing;

    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(static_cast<std::size_t>(n) * 13);

    const double diag_step = h * std::numbers::sqrt2;
    constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;

    int row = -1;
    for (int i = -grid.mx; i <= grid.mx; ++i) {
        for (int j = -grid.my; j <= grid.my; ++j) {
            const int self = grid.interior_index(i, j);
            if (self < 0) continue;
            ++row;
            const double x0 = grid.x_of(i), y0 = grid.y_of(j);
            std::map<int, double> coeff;
            coeff[self] += 20.0;

            static constexpr int axis[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
            for (const auto& e : axis) {
                const int n1 = grid.interior_index(i + e[0], j + e[1]);
                const int n2 = grid.interior_index(i + 2 * e[0], j + 2 * e[1]);
                if (n1 >= 0 && n2 >= 0) {
                    coeff[n1] += -8.0;
                    coeff[n2] += 1.0;
                } else if (n1 >= 0) {
                    // wall beyond the near neighbor; ghost for the far node
                    double d = crossing_distance(grid.shape, grid.x_of(i + e[0]),
                                                 grid.y_of(j + e[1]), e[0], e[1], h);
                    d = std::clamp(d, 0.5, 1.9999);
                    coeff[n1] += -8.0 + ghost_weight(1.0, d);
                } else {
                    // wall between this node and the near neighbor
                    double d = crossing_distance(grid.shape, x0, y0, e[0], e[1], h);
                    d = std::clamp(d, 0.5, 2.9999);
                    coeff[self] += -8.0 * ghost_weight(1.0, d) + ghost_weight(2.0, d);
                }
            }
            static constexpr int diag[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
            for (const auto& e : diag) {
                const int n1 = grid.interior_index(i + e[0], j + e[1]);
                if (n1 >= 0) {
                    coeff[n1] += 2.0;
                } else {
                    double d = crossing_distance(grid.shape, x0, y0, e[0] * inv_sqrt2,
                                                 e[1] * inv_sqrt2, diag_step);
                    d = std::clamp(d, 0.3, 2.9999);
                    coeff[self] += 2.0 * ghost_weight(1.0, d);
                }
            }
            for (const auto& [col, v] : coeff) triplets.emplace_back(row, col, v);
        }
    }

    SpMat a(n, n);
    a.setFromTriplets(triplets.begin(), triplets.end());
    a.makeCompressed();

    const double rhs_value = grid.load / grid.rigidity * h * h * h * h;
    Eigen::VectorXd b = Eigen::VectorXd::Constant(n, rhs_value);

    Eigen::VectorXd w;
    int iterations = 0;
    double residual;
    if (grid.load == 0.0) {
        w = Eigen::VectorXd::Zero(n);
        residual = 0.0;
    } else {
        Eigen::BiCGSTAB<SpMat, Eigen::IncompleteLUT<double>> solver;
        solver.preconditioner().setDroptol(1e-6);
        solver.preconditioner().setFillfactor(30);
        solver.setTolerance(1e-10);
        solver.setMaxIterations(2000);
        solver.compute(a);
        if (solver.info() != Eigen::Success)
            throw numerical_error("solve_plate: preconditioner factorization failed");
        w = solver.solve(b);
        iterations = static_cast<int>(solver.iterations());
        residual = (a * w - b).norm() / b.norm();

        // BiCGSTAB's recursive residual floors out near 1e-8; iterative
        // refinement against the true residual pushes past it.
        std::ostringstream history;
        history << residual;
        for (int round = 0; residual > 0.1 * kResidualTarget && round < 6; ++round) {
            const Eigen::VectorXd r = b - a * w;
            const Eigen::VectorXd delta = solver.solve(r);
            w += delta;
            iterations += static_cast<int>(solver.iterations());
            residual = (a * w - b).norm() / b.norm();
            history << " -> " << residual;
        }
        if (residual > kResidualTarget || !std::isfinite(residual))
            throw numerical_error("solve_plate: residual stalled above " +
                                  std::to_string(kResidualTarget) + " (history: " + history.str() +
                                  ")");
    }

    FieldSolution out;
    out.shape = grid.shape;
    out.spacing = h;
    out.mx = grid.mx;
    out.my = grid.my;
    out.w.assign(static_cast<std::size_t>(2 * grid.mx + 1) * (2 * grid.my + 1), 0.0);
    out.residual = residual;
    out.iterations = iterations;
    out.max_w = 0.0;
    out.max_x = 0.0;
    out.max_y = 0.0;
    for (int i = -grid.mx; i <= grid.mx; ++i) {
        for (int j = -grid.my; j <= grid.my; ++j) {
            const int k = grid.interior_index(i, j);
            if (k < 0) continue;
            const double value = w[k];
            out.w[static_cast<std::size_t>(i + grid.mx) * (2 * grid.my + 1) + (j + grid.my)] =
                value;
            if (value > out.max_w) {
                out.max_w = value;
                out.max_x = grid.x_of(i);
                out.max_y = grid.y_of(j);
            }
        }
    }
    return out;
}

double FieldSolution::value_at(double x, double y) const {
    const double fi = x / spacing + mx;
    const double fj = y / spacing + my;
    const int i = static_cast<int>(std::floor(fi));
    const int j = static_cast<int>(std::floor(fj));
    if (i < 0 || j < 0 || i >= 2 * mx || j >= 2 * my) return 0.0;
    const double tx = fi - i, ty = fj - j;
    const auto at = [&](int ii, int jj) {
        return w[static_cast<std::size_t>(ii) * (2 * my + 1) + jj];
    };
    return (1 - tx) * (1 - ty) * at(i, j) + tx * (1 - ty) * at(i + 1, j) +
           (1 - tx) * ty * at(i, j + 1) + tx * ty * at(i + 1, j + 1);
}

double FieldSolution::integrate(
    const std::function<double(double, double, double)>& integrand) const {
    static const double gx[4] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                                 0.8611363115940526};
    static const double gw[4] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                                 0.3478548451374538};

    double total = 0.0;
    double covered = 0.0;
    const double cell_area = spacing * spacing;
    for (int i = -mx; i < mx; ++i) {
        for (int j = -my; j < my; ++j) {
            const double x0 = i * spacing, y0 = j * spacing;
            // cell corners must lie inside the shape
            if (!contains(shape, x0, y0) || !contains(shape, x0 + spacing, y0) ||
                !contains(shape, x0, y0 + spacing) || !contains(shape, x0 + spacing, y0 + spacing))
                continue;
            covered += cell_area;
            const double cx = x0 + 0.5 * spacing, cy = y0 + 0.5 * spacing;
            double sum = 0.0;
            for (int p = 0; p < 4; ++p) {
                const double x = cx + 0.5 * spacing * gx[p];
                double inner = 0.0;
                for (int q = 0; q < 4; ++q) {
                    const double y = cy + 0.5 * spacing * gx[q];
                    inner += gw[q] * integrand(value_at(x, y), x, y);
                }
                sum += gw[p] * inner;
            }
            total += sum * 0.25 * cell_area;
        }
    }
    const double sliver = surface_area(shape) - covered;
    if (sliver > 0.0) total += sliver * integrand(0.0, 0.0, 0.0);
    return total;
}

double max_deflection(const FieldSolution& solution) { return solution.max_w; }

ConvergenceStudy convergence_study(const Shape& shape, double rigidity, double load,
                                   std::span<const int> nodes_across) {
    if (nodes_across.size() < 3)
        throw std::invalid_argument("convergence_study: need at least three grids");
    ConvergenceStudy study;
    for (const int n : nodes_across) {
        const GridPlate grid = GridPlate::with_nodes_across(shape, n, rigidity, load);
        const FieldSolution solution = solve_plate(grid);
        study.points.push_back({grid.spacing, solution.max_w});
    }
    for (std::size_t i = 1; i < study.points.size(); ++i) {
        const double ratio = study.points[i - 1].spacing / study.points[i].spacing;
        if (!(ratio > 1.01))
            throw std::invalid_argument("convergence_study: spacings must decrease geometrically");
    }
    const auto& pts = study.points;
    const std::size_t m = pts.size();
    const double ratio = pts[m - 2].spacing / pts[m - 1].spacing;
    const double d1 = pts[m - 2].max_w - pts[m - 3].max_w;
    const double d2 = pts[m - 1].max_w - pts[m - 2].max_w;
    study.observed_order = std::log(std::abs(d1 / d2)) / std::log(ratio);
    study.extrapolated =
        pts[m - 1].max_w + d2 / (std::pow(ratio, study.observed_order) - 1.0);
    return study;
}

double solve_beam(const CantileverSpec& spec, double load_per_length, int n_nodes) {
    if (n_nodes < 100) throw std::invalid_argument("solve_beam: need at least 100 nodes");
    const int m = n_nodes - 1;  // unknowns W_1..W_m, W_0 = 0
    const double dx = spec.length / m;
    const double rhs = load_per_length / spec.rigidity() * dx * dx * dx * dx;

    using SpMat = Eigen::SparseMatrix<double>;
    std::vector<Eigen::Triplet<double>> triplets;
    Eigen::VectorXd b = Eigen::VectorXd::Constant(m, rhs);
    for (int i = 1; i <= m; ++i) {
        // W'''' stencil with clamped-root mirror (W_{-1} = W_1, W_0 = 0) and
        // free-tip ghosts W_{m+1} = 2W_m - W_{m-1},
        // W_{m+2} = 4W_m - 4W_{m-1} + W_{m-2}.
        std::map<int, double> coeff;
        auto acc = [&](int idx, double v) {
            if (idx == -1) idx = 1;  // mirror across the clamp
            if (idx == m + 1) {
                coeff[m] += 2.0 * v;
                coeff[m - 1] += -1.0 * v;
                return;
            }
            if (idx == m + 2) {
                coeff[m] += 4.0 * v;
                coeff[m - 1] += -4.0 * v;
                coeff[m - 2] += 1.0 * v;
                return;
            }
            if (idx >= 1 && idx <= m) coeff[idx] += v;  // idx == 0 is the clamp, W = 0
        };
        acc(i - 2, 1.0);
        acc(i - 1, -4.0);
        acc(i, 6.0);
        acc(i + 1, -4.0);
        acc(i + 2, 1.0);
        for (const auto& [idx, v] : coeff) triplets.emplace_back(i - 1, idx - 1, v);
    }
    // consistent half-cell load at the free tip
    b[m - 1] = 0.5 * rhs;

    SpMat a(m, m);
    a.setFromTriplets(triplets.begin(), triplets.end());
    a.makeCompressed();
    Eigen::SparseLU<SpMat> solver;
    solver.analyzePattern(a);
    solver.factorize(a);
    if (solver.info() != Eigen::Success)
        throw numerical_error("solve_beam: factorization failed");
    const Eigen::VectorXd w = solver.solve(b);
    return w[m - 1];
}

FieldFactory oracle_field_factory(int nodes_across) {
    // one unit solve per geometry, rescaled to the requested deflection
    struct Cache {
        std::mutex mutex;
        std::map<std::string, std::shared_ptr<FieldSolution>> solutions;
    };
    auto cache = std::make_shared<Cache>();
    return [nodes_across, cache](const PlateConfig& plate, double w0) -> DeflectionField {
        const auto he = half_extents(plate.geometry.shape);
        std::ostringstream key;
        key << shape_name(plate.geometry.shape) << ":" << he[0] << ":" << he[1] << ":"
            << nodes_across;
        std::shared_ptr<FieldSolution> solution;
        {
            std::lock_guard<std::mutex> lock(cache->mutex);
            auto it = cache->solutions.find(key.str());
            if (it != cache->solutions.end()) solution = it->second;
        }
        if (!solution) {
            const GridPlate grid =
                GridPlate::with_nodes_across(plate.geometry.shape, nodes_across, 1.0, 1.0);
            solution = std::make_shared<FieldSolution>(solve_plate(grid));
            std::lock_guard<std::mutex> lock(cache->mutex);
            cache->solutions.emplace(key.str(), solution);
        }
        const double scale = solution->max_w > 0.0 ? w0 / solution->max_w : 0.0;
        auto eval = [solution, scale](double x, double y) {
            return scale * solution->value_at(x, y);
        };
        return DeflectionField{std::move(eval), w0};
    };
}

CPCurve capacitance_pressure_curve_oracle(const PlateConfig& plate, const SensorStack& stack,
                                          std::span<const double> pressures, FormulaMode mode,
                                          int nodes_across) {
    if (is_circle(plate.geometry.shape))
        return capacitance_pressure_curve(plate, stack, pressures, mode);

    const GridPlate grid =
        GridPlate::with_nodes_across(plate.geometry.shape, nodes_across, 1.0, 1.0);
    const FieldSolution unit = solve_plate(grid);
    const double gap_eff = stack.gap + stack.insulator_layers.effective_thickness();

    CPCurve curve;
    curve.points.reserve(pressures.size());
    std::ostringstream summary;
    summary << shape_name(plate.geometry.shape) << " normal-mode curve (oracle profile), gap "
            << stack.gap << " m";
    curve.config_summary = summary.str();
    for (const double p : pressures) {
        const double w0 = max_deflection_small(plate, p, mode);
        if (w0 >= stack.gap)
            throw touch_regime_error(
                "capacitance_pressure_curve_oracle: point past touch; use touch_mode curves");
        const double scale = w0 / unit.max_w;
        const double c = unit.integrate([&](double w, double, double) {
            return vacuum_permittivity / (gap_eff - scale * w);
        });
        curve.points.push_back({p, c, Region::normal});
    }
    curve.validate();
    return curve;
}

std::vector<std::pair<double, double>> calibrate_rectangle_coefficients(
    std::span<const double> ratios, std::span<const int> nodes_across) {
    std::vector<std::pair<double, double>> table;
    for (const double ratio : ratios) {
        const double b = 1.0;
        const Shape shape = make_shape(Rectangle{b / ratio, b});
        std::vector<int> minor_counts;
        // nodes_across applies to the short side here for even resolution
        for (const int n : nodes_across)
            minor_counts.push_back(static_cast<int>(std::lround((n - 1) / ratio)) + 1);
        const ConvergenceStudy study =
            convergence_study(shape, 1.0, 1.0, std::span<const int>(minor_counts));
        table.emplace_back(ratio, study.extrapolated);
    }
    return table;
}

void write_field_csv(const FieldSolution& solution, std::ostream& out) {
    out << "x_m,y_m,w_m\n";
    char buf[96];
    for (int i = -solution.mx; i <= solution.mx; ++i) {
        for (int j = -solution.my; j <= solution.my; ++j) {
            const double w =
                solution.w[static_cast<std::size_t>(i + solution.mx) * (2 * solution.my + 1) +
                           (j + solution.my)];
            if (w == 0.0) continue;
            std::snprintf(buf, sizeof buf, "%.8e,%.8e,%.8e\n", i * solution.spacing,
                          j * solution.spacing, w);
            out << buf;
        }
    }
}

void write_summary_json(const FieldSolution& solution, std::ostream& out) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "{\n  \"max_deflection_m\": %.8e,\n  \"max_location_m\": [%.8e, %.8e],\n"
                  "  \"relative_residual\": %.3e,\n  \"iterations\": %d,\n  \"spacing_m\": %.8e\n}\n",
                  solution.max_w, solution.max_x, solution.max_y, solution.residual,
                  solution.iterations, solution.spacing);
    out << buf;
}

}  // namespace capsense::fd
