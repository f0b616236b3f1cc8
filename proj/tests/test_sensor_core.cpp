#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "capsense/acoustics.hpp"
#include "capsense/geometry.hpp"
#include "capsense/load.hpp"
#include "capsense/material.hpp"

using namespace capsense;

TEST_CASE("material invariants") {
    CHECK_THROWS_AS(Material(0.0, 0.3, 1000.0), std::invalid_argument);
    CHECK_THROWS_AS(Material(1e9, 0.5, 1000.0), std::invalid_argument);
    CHECK_THROWS_AS(Material(1e9, -0.1, 1000.0), std::invalid_argument);
    CHECK_THROWS_AS(Material(1e9, 0.3, 0.0), std::invalid_argument);
    CHECK_NOTHROW(Material(1e9, 0.0, 1000.0));
}

TEST_CASE("flexural rigidity") {
    // coefficients cancel: E = 12, nu = 0, h = 1
    CHECK(flexural_rigidity(Material(12.0, 0.0, 1.0), 1.0) == doctest::Approx(1.0));

    // default PI foil at 25 um
    const Material pi(2.5e9, 0.34, 1420.0);
    const double d = flexural_rigidity(pi, 25e-6);
    // E h^3 / (12 (1 - nu^2)) evaluated independently
    const double expected = 2.5e9 * std::pow(25e-6, 3) / (12.0 * (1.0 - 0.34 * 0.34));
    CHECK(d == doctest::Approx(expected).epsilon(1e-14));
    CHECK(d == doctest::Approx(3.681e-6).epsilon(1e-3));

    // cubic thickness dependence, exact
    CHECK(flexural_rigidity(pi, 50e-6) / flexural_rigidity(pi, 25e-6) ==
          doctest::Approx(8.0).epsilon(1e-14));

    // nu = 0 reduces to E h^3 / 12 exactly
    const Material nu0(3e9, 0.0, 1000.0);
    CHECK(flexural_rigidity(nu0, 1e-4) == doctest::Approx(3e9 * 1e-12 / 12.0).epsilon(1e-15));

    CHECK_THROWS_AS(flexural_rigidity(pi, 0.0), std::invalid_argument);

    // strictly increasing in E and h
    CHECK(flexural_rigidity(Material(3e9, 0.34, 1420.0), 25e-6) > d);
    CHECK(flexural_rigidity(pi, 26e-6) > d);
}

TEST_CASE("surface areas") {
    CHECK(surface_area(Shape{Circle{1.0}}) == doctest::Approx(std::numbers::pi));
    CHECK(surface_area(Shape{Square{2.0}}) == doctest::Approx(4.0));
    CHECK(surface_area(Shape{Rectangle{3.0, 2.0}}) == doctest::Approx(6.0));
    CHECK(surface_area(Shape{Ellipse{2.0, 1.0}}) == doctest::Approx(2.0 * std::numbers::pi));
    CHECK(surface_area(Shape{Cantilever{0.02, 0.01}}) == doctest::Approx(2e-4));

    // regular pentagon area (1/4) sqrt(5 (5 + 2 sqrt 5)) a^2, checked against
    // triangulation of the vertex fan
    const double edge = 1.0;
    CHECK(surface_area(Shape{Pentagon{edge}}) == doctest::Approx(1.7204774005889671).epsilon(1e-12));
    const auto verts = pentagon_vertices(edge);
    double fan = 0.0;
    for (int k = 0; k < 5; ++k) {
        const auto& p = verts[k];
        const auto& q = verts[(k + 1) % 5];
        fan += 0.5 * std::abs(p[0] * q[1] - p[1] * q[0]);
    }
    CHECK(surface_area(Shape{Pentagon{edge}}) == doctest::Approx(fan).epsilon(1e-12));

    // quadratic scaling property
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dim(0.1, 10.0), scale(0.1, 10.0);
    for (int i = 0; i < 50; ++i) {
        const double s = scale(rng);
        const double a = dim(rng), b = dim(rng);
        const Shape shapes[] = {Shape{Circle{a}}, Shape{Ellipse{a + b, a}}, Shape{Square{a}},
                                Shape{Rectangle{a, b}}, Shape{Pentagon{a}},
                                Shape{Cantilever{a, b}}};
        const Shape scaled[] = {Shape{Circle{s * a}}, Shape{Ellipse{s * (a + b), s * a}},
                                Shape{Square{s * a}}, Shape{Rectangle{s * a, s * b}},
                                Shape{Pentagon{s * a}}, Shape{Cantilever{s * a, s * b}}};
        for (int k = 0; k < 6; ++k)
            CHECK(surface_area(scaled[k]) ==
                  doctest::Approx(s * s * surface_area(shapes[k])).epsilon(1e-12));
    }
}

TEST_CASE("shape normalization and validation") {
    const Shape e = make_shape(Ellipse{1.0, 2.0});
    CHECK(std::get<Ellipse>(e).semi_major == 2.0);
    CHECK(std::get<Ellipse>(e).semi_minor == 1.0);
    const Shape r = make_shape(Rectangle{1.0, 4.0});
    CHECK(std::get<Rectangle>(r).side_a == 4.0);
    CHECK(std::get<Rectangle>(r).side_b == 1.0);
    CHECK_THROWS_AS(make_shape(Circle{0.0}), std::invalid_argument);
    CHECK_THROWS_AS(make_shape(Pentagon{-1.0}), std::invalid_argument);
    CHECK_THROWS_AS(DiaphragmGeometry(Circle{1.0}, 0.0), std::invalid_argument);
}

TEST_CASE("containment") {
    CHECK(contains(Shape{Circle{1.0}}, 0.0, 0.0));
    CHECK_FALSE(contains(Shape{Circle{1.0}}, 1.0, 0.1));
    CHECK(contains(Shape{Pentagon{1.0}}, 0.0, 0.0));
    // pentagon vertex sits on the +y axis
    const auto verts = pentagon_vertices(1.0);
    CHECK(verts[0][0] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(verts[0][1] > 0.0);
    CHECK(contains(Shape{Pentagon{1.0}}, 0.0, verts[0][1] - 1e-9));
    CHECK_FALSE(contains(Shape{Pentagon{1.0}}, 0.0, verts[0][1] + 1e-9));
    CHECK(contains(Shape{Cantilever{2.0, 1.0}}, 1.0, 0.0));
    CHECK_FALSE(contains(Shape{Cantilever{2.0, 1.0}}, -0.1, 0.0));
}

TEST_CASE("spl conversions") {
    CHECK(spl_to_pressure(0.0) == doctest::Approx(20e-6).epsilon(1e-12));
    CHECK(spl_to_pressure(20.0) == doctest::Approx(200e-6).epsilon(1e-12));
    // 94 dB is commonly rounded to 1 Pa
    CHECK(spl_to_pressure(94.0) == doctest::Approx(1.002).epsilon(1e-3));
    CHECK(std::abs(spl_to_pressure(94.0) - 1.002) < 1e-3);

    CHECK_THROWS_AS(pressure_to_spl(0.0), std::invalid_argument);
    CHECK_THROWS_AS(pressure_to_spl(-1.0), std::invalid_argument);

    // round trip and monotonicity across [0, 140] dB
    double prev = 0.0;
    for (int i = 0; i <= 140; ++i) {
        const double spl = static_cast<double>(i);
        const double p = spl_to_pressure(spl);
        CHECK(p > prev);
        prev = p;
        CHECK(pressure_to_spl(p) == doctest::Approx(spl).epsilon(1e-12));
    }
}

TEST_CASE("pressure loads") {
    CHECK_THROWS_AS(StaticLoad(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(HarmonicLoad(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(HarmonicLoad(-1.0, 10.0), std::invalid_argument);
    const HarmonicLoad tone(1.0, 300.0);
    CHECK(tone.angular_frequency() == doctest::Approx(2.0 * std::numbers::pi * 300.0));
}

TEST_CASE("materials table carries PI defaults") {
    const auto pi = find_material("PI");
    REQUIRE(pi.has_value());
    CHECK(pi->youngs_modulus == doctest::Approx(2.5e9));
    CHECK(pi->poisson_ratio == doctest::Approx(0.34));
    CHECK(pi->density == doctest::Approx(1420.0));
    CHECK_FALSE(find_material("unobtainium").has_value());
}
