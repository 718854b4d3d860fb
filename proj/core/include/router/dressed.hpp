// dressed.hpp — dressed-state analysis of the cavity / upper-transition block:
// exact 2x2 dressed pair, Rabi splitting, large-detuning approximations, and
// spectrum valley-width extraction.

#pragma once

#include <array>
#include <span>
#include <vector>

#include "router/model.hpp"

namespace router {

/// Rabi splitting Omega_n(Delta_a) = sqrt(Delta_a^2 + 4 n lambda^2).
double rabi_splitting(double delta_a, double lambda, int n);

/// Exact dressed pair of the n-excitation block spanned by |2,n> and |3,n-1>,
/// written relative to the |2,n> level so the block reads [[0, g], [g, Delta_a]]
/// with g = sqrt(n) lambda.
///
/// Labeling: |phi_+> is the branch adiabatically connected to |2,n> as lambda -> 0
/// (so for Delta_a > 0 it is the lower of the two levels). e_plus - e_minus is
/// therefore +-Omega_n depending on the sign of Delta_a.
struct DressedPair {
    double e_plus = 0.0;
    double e_minus = 0.0;
    double omega_n = 0.0;

    // Eigenvector components over (|2,n>, |3,n-1>).
    std::array<double, 2> c_plus{1.0, 0.0};
    std::array<double, 2> c_minus{0.0, 1.0};

    // Effective waveguide linewidths gamma |<2,n|phi_+->|^2; they sum to gamma.
    double gamma_plus = 0.0;
    double gamma_minus = 0.0;

    bool two_level_limit = false;  // n = 0 or lambda = 0: bare |2,n> only
};

DressedPair dressed_pair(double delta_a, const CavityParams& cavity, double gamma);
DressedPair dressed_pair(const ValidatedSystem& system);

/// Large-detuning (|Delta_a| >> sqrt(n) lambda) approximations, valid away from
/// resonance. gamma_plus/gamma_minus are the approximate dressed linewidths for
/// normalized dressed kets; coupling_minus keeps the first-order cross-coupling
/// scale mixing * gamma_plus for comparison with the unnormalized-ket expansion.
struct LargeDetuningApprox {
    double gamma_plus = 0.0;      // ~ Delta_a^2 / (Delta_a^2 + n lambda^2) * gamma
    double gamma_minus = 0.0;     // ~ n lambda^2 / (Delta_a^2 + n lambda^2) * gamma
    double mixing = 0.0;          // sqrt(n) lambda / Delta_a
    double coupling_minus = 0.0;  // sqrt(n) lambda Delta_a / (Delta_a^2 + n lambda^2) * gamma
};

LargeDetuningApprox large_detuning_approx(double delta_a, const CavityParams& cavity,
                                          double gamma);

/// One transmission valley of a sampled spectrum: position of the local minimum,
/// full width at half-depth (midpoint between the minimum and the unit baseline,
/// located by linear interpolation), and depth 1 - T_min.
struct Valley {
    double center = 0.0;
    double fwhm = 0.0;
    double depth = 0.0;
    bool truncated = false;  // half-depth crossing ran off the sampled grid
};

struct SpectrumSample {
    double x = 0.0;
    double transmission = 0.0;
};

/// Scans a finely sampled transmission spectrum for valleys. The grid must
/// resolve each valley with a comfortable number of samples (>= 20).
std::vector<Valley> extract_valley_widths(std::span<const SpectrumSample> spectrum);

}  // namespace router
