// test_scattering.cpp — scattering factor branches, unitarity, emitter
// amplitudes, effective potential, analytic special points.

#include <doctest.h>

#include <cmath>
#include <random>

#include "router/scattering.hpp"

using namespace router;

namespace {

const CavityParams kCavity{0.0, 1.0, 1};  // lambda = gamma, single photon
constexpr double kGamma = 1.0;

ScatterPoint at(double delta_k_n, double delta_a) {
    return ScatterPoint::from_detunings(delta_k_n, delta_a);
}

}  // namespace

TEST_CASE("resonant point with Delta_a = 1: U = -0.4 + 0.8i") {
    const Complex u = scattering_factor(at(0.0, 1.0), kCavity, kGamma);
    CHECK(u.real() == doctest::Approx(-0.4).epsilon(1e-14));
    CHECK(u.imag() == doctest::Approx(0.8).epsilon(1e-14));

    const Complex t = even_transmission(at(0.0, 1.0), kCavity, kGamma);
    CHECK(t.real() == doctest::Approx(0.6).epsilon(1e-14));
    CHECK(t.imag() == doctest::Approx(0.8).epsilon(1e-14));
}

TEST_CASE("full-transmission line is exact") {
    for (double da : {0.25, 1.0, 3.7, -2.0}) {
        const Complex u = scattering_factor(at(-da, da), kCavity, kGamma);
        CHECK(u == Complex(0.0, 0.0));
    }
}

TEST_CASE("pole roots give U = -2 to rounding") {
    for (double da : {0.0, 1.0, 4.0, -3.0}) {
        const SpecialPoints pts = special_points(da, kCavity);
        CHECK(pts.pole_roots[0] < pts.pole_roots[1]);
        for (double root : pts.pole_roots) {
            const Complex u = scattering_factor(at(root, da), kCavity, kGamma);
            CHECK(u.real() == doctest::Approx(-2.0).epsilon(1e-12));
            CHECK(std::abs(u.imag()) < 1e-12);
        }
    }
}

TEST_CASE("pole roots solve the quadratic stably at extreme detuning") {
    const double da = 1e8;
    const SpecialPoints pts = special_points(da, kCavity);
    // Product and sum of the roots of D^2 + Da D - n lambda^2.
    CHECK(pts.pole_roots[0] * pts.pole_roots[1] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(pts.pole_roots[0] + pts.pole_roots[1] == doctest::Approx(-da).epsilon(1e-12));
    CHECK(pts.pole_roots[1] == doctest::Approx(1e-8).epsilon(1e-10));
}

TEST_CASE("n = 0 reduces to the two-level form") {
    const CavityParams empty{0.0, 1.0, 0};
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> d(-5.0, 5.0);
    for (int i = 0; i < 200; ++i) {
        const double dk = d(rng);
        const Complex u = scattering_factor(at(dk, d(rng)), empty, kGamma);
        const Complex expected = Complex(0.0, -kGamma) / Complex(dk, kGamma / 2.0);
        CHECK(std::abs(u - expected) < 1e-12);
    }
    // The same branch handles lambda = 0 and the 0/0 point D = -Da.
    const CavityParams dark{0.0, 0.0, 3};
    const Complex u0 = scattering_factor(at(0.0, 0.0), dark, kGamma);
    CHECK(std::abs(u0 - Complex(-2.0, 0.0)) < 1e-14);

    const SpecialPoints pts = special_points(2.0, empty);
    CHECK(pts.pole_roots[0] == doctest::Approx(-2.0));
    CHECK(pts.pole_roots[1] == doctest::Approx(0.0));
}

TEST_CASE("|1 + U| = 1 over a 10^4-point grid") {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double dk = -8.0 + 16.0 * i / 99.0;
        for (int j = 0; j < 100; ++j) {
            const double da = -8.0 + 16.0 * j / 99.0;
            const Complex t = even_transmission(at(dk, da), kCavity, kGamma);
            worst = std::max(worst, std::abs(std::abs(t) - 1.0));
        }
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("emitter amplitudes satisfy the stationary equations") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> d(-4.0, 4.0);
    for (int i = 0; i < 300; ++i) {
        const double dk = d(rng), da = d(rng);
        if (std::abs(dk + da) < 1e-3) continue;  // stay off the decoupled line
        const ScatterPoint point = at(dk, da);
        const Complex f0 = incident_midpoint(point, kCavity, kGamma);
        const EmitterAmplitudes amp = emitter_amplitudes(point, kCavity, kGamma, f0);
        if (amp.kind != EmitterAmplitudes::Kind::Finite) continue;

        const double g = std::sqrt(static_cast<double>(kCavity.n)) * kCavity.lambda;
        // D beta - sqrt(n) lambda zeta = sqrt(gamma) f0
        const Complex r1 = dk * amp.beta - g * amp.zeta - std::sqrt(kGamma) * f0;
        // (D + Da) zeta = sqrt(n) lambda beta
        const Complex r2 = (dk + da) * amp.zeta - g * amp.beta;
        CHECK(std::abs(r1) < 1e-10);
        CHECK(std::abs(r2) < 1e-10);

        // The scattering factor is the radiated amplitude -i sqrt(gamma) beta.
        const Complex u = scattering_factor(point, kCavity, kGamma);
        CHECK(std::abs(Complex(0.0, -1.0) * std::sqrt(kGamma) * amp.beta - u) < 1e-10);
    }
}

TEST_CASE("effective potential: finite value, zero, and poles") {
    const PotentialValue generic = effective_potential(at(1.0, 2.0), kCavity, kGamma);
    REQUIRE(generic.finite());
    CHECK(generic.value == doctest::Approx(kGamma * 3.0 / (1.0 * 3.0 - 1.0)).epsilon(1e-14));

    const PotentialValue transparent = effective_potential(at(-2.0, 2.0), kCavity, kGamma);
    REQUIRE(transparent.finite());
    CHECK(transparent.value == 0.0);

    // At Delta_a = 0 the pole roots are exactly +-1 and hit the branch exactly.
    const PotentialValue upper = effective_potential(at(1.0, 0.0), kCavity, kGamma);
    CHECK(upper.kind == PotentialValue::Kind::PlusInfinity);
    const PotentialValue lower = effective_potential(at(-1.0, 0.0), kCavity, kGamma);
    CHECK(!lower.finite());

    const CavityParams dark{0.0, 0.0, 0};
    const PotentialValue origin = effective_potential(at(0.0, 0.0), dark, kGamma);
    CHECK(origin.kind == PotentialValue::Kind::Indeterminate);
}

TEST_CASE("four-port composition matches the manual pipeline") {
    const CouplingMatrix c{0.5, 0.3, 0.1, 0.1};
    const PortLabel ra{Waveguide::A, Direction::Right};
    const ScatterPoint point = at(0.7, -1.3);
    const Complex u = scattering_factor(point, kCavity, c.gamma());
    const FourPortResult direct = four_port(point, kCavity, c, ra);
    const FourPortResult composed = reconstruct_four_port(u, ra, c);
    CHECK(std::abs(direct.t_same - composed.t_same) < 1e-14);
    CHECK(std::abs(direct.r_same - composed.r_same) < 1e-14);
    CHECK(std::abs(direct.t_other - composed.t_other) < 1e-14);
    CHECK(std::abs(direct.r_other - composed.r_other) < 1e-14);
}

TEST_CASE("resonant routing transmission n^2 / (n^2 + Delta_a^2/4)") {
    const CouplingMatrix c{0.5, 0.3, 0.1, 0.1};
    const PortLabel ra{Waveguide::A, Direction::Right};
    for (int n : {1, 2, 5, 20}) {
        for (double da : {0.5, 1.0, 4.0}) {
            const CavityParams cavity{0.0, 1.0, n};
            const FourPortResult r = four_port(at(0.0, da), cavity, c, ra);
            const double expected =
                static_cast<double>(n) * n / (static_cast<double>(n) * n + da * da / 4.0);
            CHECK(r.transmission() == doctest::Approx(expected).epsilon(1e-12));
        }
    }
    // Single photon, Delta_a = gamma: T_p = 0.8; T_p >= 0.99 first at n = 5.
    CHECK(four_port(at(0.0, 1.0), CavityParams{0.0, 1.0, 1}, c, ra).transmission() ==
          doctest::Approx(0.8).epsilon(1e-12));
    CHECK(four_port(at(0.0, 1.0), CavityParams{0.0, 1.0, 4}, c, ra).transmission() < 0.99);
    CHECK(four_port(at(0.0, 1.0), CavityParams{0.0, 1.0, 5}, c, ra).transmission() >= 0.99);
}
