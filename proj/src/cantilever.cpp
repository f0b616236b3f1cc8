#include "capsense/cantilever.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "capsense/errors.hpp"

namespace capsense {

namespace {

constexpr double kResonanceGuard = 1e-9;

// Static-equivalent tip force for a uniform pressure amplitude: matches the
// distributed-load tip deflection q L^4 / (8 D) in the omega -> 0 limit.
double equivalent_tip_force(const CantileverSpec& spec, double pressure) {
    return 0.375 * pressure * spec.width * spec.length;
}

void check_resonance(double beta_l, double frequency) {
    const double denom = detail::resonance_denominator(beta_l);
    if (std::abs(denom) <= kResonanceGuard) {
        // name the mode whose root is nearest to beta_l
        int mode = 1;
        double best = std::abs(beta_l - characteristic_root(1));
        for (int k = 2; k <= 16; ++k) {
            const double dist = std::abs(beta_l - characteristic_root(k));
            if (dist < best) {
                best = dist;
                mode = k;
            }
        }
        std::ostringstream msg;
        msg << "harmonic evaluation at " << frequency << " Hz is within the guard band of mode "
            << mode;
        throw resonance_proximity_error(msg.str(), mode, frequency);
    }
}

}  // namespace

CantileverSpec::CantileverSpec(double length, double width, double thickness, Material material)
    : length(length), width(width), thickness(thickness), material(std::move(material)) {
    if (!(length > 0.0 && width > 0.0 && thickness > 0.0))
        throw std::invalid_argument("CantileverSpec: dimensions must be positive");
}

double CantileverSpec::mass_per_length() const {
    return material.density * width * thickness;
}

double CantileverSpec::rigidity() const {
    return beam_rigidity(material, width, thickness);
}

double CantileverSpec::aspect_ratio() const { return width / length; }

double beta(const CantileverSpec& spec, double omega) {
    if (!(omega > 0.0)) throw std::invalid_argument("beta: omega must be positive");
    return std::pow(spec.mass_per_length() * omega * omega / spec.rigidity(), 0.25);
}

double detail::resonance_denominator(double beta_l) {
    return 1.0 + std::cos(beta_l) * std::cosh(beta_l);
}

double characteristic_root(int k) {
    if (k < 1) throw std::invalid_argument("characteristic_root: mode index must be >= 1");
    // Roots pair up around odd multiples of pi:
    //   x_{2j-1} in ((2j-1)pi - pi/2, (2j-1)pi),  x_{2j} in ((2j-1)pi, (2j-1)pi + pi/2)
    // with g(x) = cos x + 1/cosh x sharing the roots but staying well conditioned.
    const int j = (k + 1) / 2;
    const double center = (2 * j - 1) * std::numbers::pi;
    double lo = (k % 2 == 1) ? center - std::numbers::pi / 2.0 : center;
    double hi = (k % 2 == 1) ? center : center + std::numbers::pi / 2.0;
    auto g = [](double x) { return std::cos(x) + 1.0 / std::cosh(x); };
    // g(lo) and g(hi) straddle zero by construction of the bracket
    const bool rising = g(hi) > g(lo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if ((gm < 0.0) == rising)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-16 * hi) break;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> mode_frequencies(const CantileverSpec& spec, int n_modes) {
    if (n_modes < 1) throw std::invalid_argument("mode_frequencies: need at least one mode");
    const double scale = std::sqrt(spec.rigidity() / spec.mass_per_length()) /
                         (2.0 * std::numbers::pi * spec.length * spec.length);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n_modes));
    for (int k = 1; k <= n_modes; ++k) {
        const double x = characteristic_root(k);
        out.push_back(x * x * scale);
    }
    return out;
}

double detail::response_bracket(double b, double length, double x) {
    const double bl = b * length;
    const double bx = b * x;
    return std::sin(bx - bl) + std::sinh(bl - bx) - std::cos(bx) * std::sinh(bl) +
           std::sin(bl) * std::cosh(bx) + std::sin(bx) * std::cosh(bl) -
           std::cos(bl) * std::sinh(bx);
}

double detail::response_bracket_second_derivative(double b, double length, double x) {
    const double bl = b * length;
    const double bx = b * x;
    return b * b *
           (-std::sin(bx - bl) + std::sinh(bl - bx) + std::cos(bx) * std::sinh(bl) +
            std::sin(bl) * std::cosh(bx) - std::sin(bx) * std::cosh(bl) -
            std::cos(bl) * std::sinh(bx));
}

double harmonic_response(const CantileverSpec& spec, double x, double t,
                         const HarmonicLoad& load) {
    if (!(x >= 0.0 && x <= spec.length))
        throw std::invalid_argument("harmonic_response: x must lie in [0, L]");
    if (load.amplitude == 0.0) return 0.0;
    const double omega = load.angular_frequency();
    const double b = beta(spec, omega);
    check_resonance(b * spec.length, load.frequency);
    const double force = equivalent_tip_force(spec, load.amplitude) * std::sin(omega * t);
    const double d = spec.rigidity();
    return force * detail::response_bracket(b, spec.length, x) /
           (2.0 * d * b * b * b * detail::resonance_denominator(b * spec.length));
}

double harmonic_amplitude(const CantileverSpec& spec, double x, const HarmonicLoad& load) {
    if (!(x >= 0.0 && x <= spec.length))
        throw std::invalid_argument("harmonic_amplitude: x must lie in [0, L]");
    if (load.amplitude == 0.0) return 0.0;
    const double omega = load.angular_frequency();
    const double b = beta(spec, omega);
    check_resonance(b * spec.length, load.frequency);
    const double force = equivalent_tip_force(spec, load.amplitude);
    const double d = spec.rigidity();
    return std::abs(force * detail::response_bracket(b, spec.length, x) /
                    (2.0 * d * b * b * b * detail::resonance_denominator(b * spec.length)));
}

double bending_moment_clamped(const CantileverSpec& spec, double t, const HarmonicLoad& load) {
    if (load.amplitude == 0.0) return 0.0;
    const double omega = load.angular_frequency();
    const double b = beta(spec, omega);
    check_resonance(b * spec.length, load.frequency);
    const double force = equivalent_tip_force(spec, load.amplitude) * std::sin(omega * t);
    return force * detail::response_bracket_second_derivative(b, spec.length, 0.0) /
           (2.0 * b * b * b * detail::resonance_denominator(b * spec.length));
}

double tip_deflection_static(const CantileverSpec& spec, double pressure) {
    if (!(pressure >= 0.0))
        throw std::invalid_argument("tip_deflection_static: pressure must be non-negative");
    const double q = pressure * spec.width;
    const double l = spec.length;
    return q * l * l * l * l / (8.0 * spec.rigidity());
}

double response_time_proxy(const CantileverSpec& spec) {
    return 1.0 / mode_frequencies(spec, 1).front();
}

}  // namespace capsense
