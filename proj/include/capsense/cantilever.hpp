#pragma once

#include <vector>

#include "capsense/load.hpp"
#include "capsense/material.hpp"

namespace capsense {

// Uniform rectangular-section cantilever, clamped at x = 0, free at x = length.
struct CantileverSpec {
    double length;     // m
    double width;      // m
    double thickness;  // m
    Material material;

    CantileverSpec(double length, double width, double thickness, Material material);

    double mass_per_length() const;  // rho w h, kg/m
    double rigidity() const;         // E w h^3 / 12, N m^2
    double aspect_ratio() const;     // width / length
};

// Wavenumber beta = (m omega^2 / D)^(1/4).
double beta(const CantileverSpec& spec, double omega);

// k-th positive root of 1 + cos(x) cosh(x) = 0, k >= 1.
double characteristic_root(int k);

// First n natural frequencies f_k = (x_k / L)^2 sqrt(D/m) / (2 pi), Hz.
std::vector<double> mode_frequencies(const CantileverSpec& spec, int n_modes);

// Transverse deflection under P(t) = Pn sin(omega t); refuses evaluation
// within the resonance guard band. The pressure amplitude is carried as the
// static-equivalent tip force (3/8) Pn w L so the quasi-static limit matches
// tip_deflection_static.
double harmonic_response(const CantileverSpec& spec, double x, double t, const HarmonicLoad& load);

// Peak of |harmonic_response| over t at position x.
double harmonic_amplitude(const CantileverSpec& spec, double x, const HarmonicLoad& load);

// M(t) = D d2W/dx2 at the clamped edge, from the analytic second derivative.
double bending_moment_clamped(const CantileverSpec& spec, double t, const HarmonicLoad& load);

// Static tip deflection q L^4 / (8 D) with q = P w.
double tip_deflection_static(const CantileverSpec& spec, double pressure);

// 1 / f1; a cross-design ordering proxy, not an absolute prediction.
double response_time_proxy(const CantileverSpec& spec);

namespace detail {
// Six-term spatial bracket of the harmonic response solution.
double response_bracket(double beta, double length, double x);
double response_bracket_second_derivative(double beta, double length, double x);
// 1 + cos(beta L) cosh(beta L); vanishes at resonance.
double resonance_denominator(double beta_l);
}  // namespace detail

}  // namespace capsense
