// scattering.hpp — closed-form even-mode scattering: scattering factor U_k,
// even-mode transmission, effective delta potential, emitter amplitudes, and
// the analytic special-point loci (full-transmission line and pole roots).

#pragma once

#include <array>
#include <complex>

#include "router/mode_transform.hpp"
#include "router/model.hpp"

namespace router {

/// Scattering factor U_k = t_{k,e} - 1:
///
///   U_k = -i gamma (D + Da) / [ (D (D + Da) - n lambda^2) + i (gamma/2) (D + Da) ]
///
/// with D = Delta_k^n, Da = Delta_a. Finite for all real parameters. Exact special
/// cases: U = 0 on the full-transmission line D + Da = 0 (n >= 1), U = -2 where the
/// quadratic factor vanishes. The n = 0 (or lambda = 0) case reduces to the
/// two-level form U = -i gamma / (D + i gamma/2), which also resolves the only
/// 0/0 point of the general expression.
Complex scattering_factor(const ScatterPoint& point, const CavityParams& cavity, double gamma);

/// Even-mode transmission t_{k,e} = 1 + U_k; unit modulus for real parameters.
Complex even_transmission(const ScatterPoint& point, const CavityParams& cavity, double gamma);

/// Diagnostic effective delta potential V = gamma (D+Da) / (D(D+Da) - n lambda^2),
/// tagged at its singular points instead of returning silent NaN/inf.
struct PotentialValue {
    enum class Kind { Finite, PlusInfinity, MinusInfinity, Indeterminate };

    Kind kind = Kind::Finite;
    double value = 0.0;  // meaningful only when kind == Finite

    bool finite() const { return kind == Kind::Finite; }
};

PotentialValue effective_potential(const ScatterPoint& point, const CavityParams& cavity,
                                   double gamma);

/// Steady-state emitter amplitudes for incident plane-wave midpoint value f0 = f_k(0):
///   beta = sqrt(gamma) f0 (D+Da) / (D(D+Da) - n lambda^2),
///   zeta = sqrt(n) lambda beta / (D+Da).
struct EmitterAmplitudes {
    enum class Kind { Finite, Singular };

    Kind kind = Kind::Finite;
    Complex beta;
    Complex zeta;
};

EmitterAmplitudes emitter_amplitudes(const ScatterPoint& point, const CavityParams& cavity,
                                     double gamma, Complex f0);

/// Midpoint value f_k(0) = (1/2)(1 + t_{k,e}) P_k(0) for unit incident amplitude.
Complex incident_midpoint(const ScatterPoint& point, const CavityParams& cavity, double gamma);

/// Full four-port evaluation: scattering factor composed with the channel map.
FourPortResult four_port(const ScatterPoint& point, const CavityParams& cavity,
                         const CouplingMatrix& couplings, PortLabel input);

FourPortResult four_port(const ScatterPoint& point, const ValidatedSystem& system,
                         PortLabel input);

/// Analytic loci in Delta_k^n at fixed Delta_a:
///   pit_line: the full-transmission point Delta_k^n = -Delta_a;
///   pole_roots: the two zero-transmission roots of D(D + Da) - n lambda^2 = 0,
///   i.e. (-Da +- Omega_n)/2; for n = 0 they degenerate to {0, -Da}.
struct SpecialPoints {
    double pit_line = 0.0;
    std::array<double, 2> pole_roots{};  // ascending order
};

SpecialPoints special_points(double delta_a, const CavityParams& cavity);

}  // namespace router
