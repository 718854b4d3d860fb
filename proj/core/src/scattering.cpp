// scattering.cpp — closed-form even-mode scattering engine.

#include "router/scattering.hpp"

#include <algorithm>
#include <cmath>

namespace router {

namespace {

double pump_strength_sq(const CavityParams& cavity) {
    return static_cast<double>(cavity.n) * cavity.lambda * cavity.lambda;
}

bool two_level_limit(const CavityParams& cavity) {
    return cavity.n == 0 || cavity.lambda == 0.0;
}

}  // namespace

Complex scattering_factor(const ScatterPoint& point, const CavityParams& cavity, double gamma) {
    if (!(gamma > 0.0))
        throw ValidationError("zero total coupling", "scattering_factor requires gamma > 0");

    const double d = point.Delta_k_n;
    if (two_level_limit(cavity)) {
        // Bare two-level emitter; also the resolution of the 0/0 point of the
        // general expression at Delta_k^n = -Delta_a = 0 with n lambda^2 = 0.
        return Complex(0.0, -gamma) / Complex(d, gamma / 2.0);
    }

    const double s = d + point.Delta_a;
    if (s == 0.0) return Complex(0.0, 0.0);  // full-transmission line, numerator vanishes

    const double quad = d * s - pump_strength_sq(cavity);
    if (quad == 0.0) return Complex(-2.0, 0.0);  // pole root, total even-mode phase flip

    return Complex(0.0, -gamma * s) / Complex(quad, (gamma / 2.0) * s);
}

Complex even_transmission(const ScatterPoint& point, const CavityParams& cavity, double gamma) {
    return 1.0 + scattering_factor(point, cavity, gamma);
}

PotentialValue effective_potential(const ScatterPoint& point, const CavityParams& cavity,
                                   double gamma) {
    if (!(gamma > 0.0))
        throw ValidationError("zero total coupling", "effective_potential requires gamma > 0");

    const double d = point.Delta_k_n;
    const double s = d + point.Delta_a;
    const double quad = d * s - pump_strength_sq(cavity);

    if (s == 0.0 && quad == 0.0) return {PotentialValue::Kind::Indeterminate, 0.0};
    if (quad == 0.0) {
        // Sign of the one-sided limit approaching the root from above in Delta_k^n:
        // V ~ gamma s / (q'(root) (Delta - root)) with q'(root) = 2 Delta_k^n + Delta_a.
        const double slope = 2.0 * d + point.Delta_a;
        const bool positive = (s * slope) > 0.0;
        return {positive ? PotentialValue::Kind::PlusInfinity
                         : PotentialValue::Kind::MinusInfinity,
                0.0};
    }
    return {PotentialValue::Kind::Finite, gamma * s / quad};
}

EmitterAmplitudes emitter_amplitudes(const ScatterPoint& point, const CavityParams& cavity,
                                     double gamma, Complex f0) {
    if (!(gamma > 0.0))
        throw ValidationError("zero total coupling", "emitter_amplitudes requires gamma > 0");

    const double d = point.Delta_k_n;
    const double root_gamma = std::sqrt(gamma);

    if (two_level_limit(cavity)) {
        if (d == 0.0) return {EmitterAmplitudes::Kind::Singular, {}, {}};
        return {EmitterAmplitudes::Kind::Finite, root_gamma * f0 / d, Complex(0.0, 0.0)};
    }

    const double s = d + point.Delta_a;
    const double quad = d * s - pump_strength_sq(cavity);
    if (quad == 0.0) return {EmitterAmplitudes::Kind::Singular, {}, {}};

    const double pump = std::sqrt(static_cast<double>(cavity.n)) * cavity.lambda;
    EmitterAmplitudes amps;
    amps.beta = root_gamma * f0 * (s / quad);
    // zeta = sqrt(n) lambda beta / s, with the s factors cancelled analytically so
    // the full-transmission line (s = 0, beta = 0) stays finite.
    amps.zeta = pump * root_gamma * f0 / quad;
    return amps;
}

Complex incident_midpoint(const ScatterPoint& point, const CavityParams& cavity, double gamma) {
    return 0.5 * (1.0 + even_transmission(point, cavity, gamma));
}

FourPortResult four_port(const ScatterPoint& point, const CavityParams& cavity,
                         const CouplingMatrix& couplings, PortLabel input) {
    return reconstruct_four_port(scattering_factor(point, cavity, couplings.gamma()), input,
                                 couplings);
}

FourPortResult four_port(const ScatterPoint& point, const ValidatedSystem& system,
                         PortLabel input) {
    return four_port(point, CavityParams{0.0, system.lambda, system.n}, system.couplings, input);
}

SpecialPoints special_points(double delta_a, const CavityParams& cavity) {
    SpecialPoints pts;
    pts.pit_line = -delta_a;

    const double nl2 = pump_strength_sq(cavity);
    if (nl2 == 0.0) {
        pts.pole_roots = {std::min(0.0, -delta_a), std::max(0.0, -delta_a)};
        return pts;
    }

    // Roots of D^2 + Delta_a D - n lambda^2 = 0 via the product form so the
    // small-magnitude root is not computed by cancellation.
    const double omega = std::sqrt(delta_a * delta_a + 4.0 * nl2);
    const double big = delta_a >= 0.0 ? (-delta_a - omega) / 2.0 : (-delta_a + omega) / 2.0;
    const double small = -nl2 / big;
    pts.pole_roots = {std::min(big, small), std::max(big, small)};
    return pts;
}

}  // namespace router
