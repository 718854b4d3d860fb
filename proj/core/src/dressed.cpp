// dressed.cpp — dressed pair, large-detuning asymptotics, valley extraction.

#include "router/dressed.hpp"

#include <algorithm>
#include <cmath>

namespace router {

double rabi_splitting(double delta_a, double lambda, int n) {
    if (lambda < 0.0)
        throw ValidationError("negative drive strength", "rabi_splitting requires lambda >= 0");
    if (n < 0)
        throw ValidationError("negative photon number", "rabi_splitting requires n >= 0");
    return std::hypot(delta_a, 2.0 * std::sqrt(static_cast<double>(n)) * lambda);
}

DressedPair dressed_pair(double delta_a, const CavityParams& cavity, double gamma) {
    if (!(gamma > 0.0))
        throw ValidationError("zero total coupling", "dressed_pair requires gamma > 0");

    const double g = std::sqrt(static_cast<double>(cavity.n)) * cavity.lambda;

    DressedPair pair;
    pair.omega_n = rabi_splitting(delta_a, cavity.lambda, cavity.n);

    if (g == 0.0) {
        pair.two_level_limit = true;
        pair.e_plus = 0.0;
        pair.e_minus = delta_a;
        pair.gamma_plus = gamma;
        pair.gamma_minus = 0.0;
        return pair;
    }

    // Eigenvalues (Delta_a +- Omega)/2; the small-magnitude one comes from the
    // eigenvalue product -g^2 to avoid cancellation. The |2,n>-connected branch
    // is the one whose eigenvalue vanishes as g -> 0.
    const double e_far =
        delta_a >= 0.0 ? (delta_a + pair.omega_n) / 2.0 : (delta_a - pair.omega_n) / 2.0;
    const double e_near = -(g * g) / e_far;
    pair.e_plus = e_near;
    pair.e_minus = e_far;

    auto eigvec = [g](double e) {
        const double norm = std::hypot(g, e);
        return std::array<double, 2>{g / norm, e / norm};
    };
    pair.c_plus = eigvec(pair.e_plus);
    pair.c_minus = eigvec(pair.e_minus);

    pair.gamma_plus = gamma * pair.c_plus[0] * pair.c_plus[0];
    pair.gamma_minus = gamma * pair.c_minus[0] * pair.c_minus[0];
    return pair;
}

DressedPair dressed_pair(const ValidatedSystem& system) {
    return dressed_pair(system.delta_a, CavityParams{0.0, system.lambda, system.n},
                        system.couplings.gamma());
}

LargeDetuningApprox large_detuning_approx(double delta_a, const CavityParams& cavity,
                                          double gamma) {
    if (delta_a == 0.0)
        throw ValidationError("approximation undefined at resonance",
                              "large_detuning_approx requires Delta_a != 0");

    const double g = std::sqrt(static_cast<double>(cavity.n)) * cavity.lambda;
    const double denom = delta_a * delta_a + g * g;

    LargeDetuningApprox approx;
    approx.gamma_plus = gamma * delta_a * delta_a / denom;
    approx.gamma_minus = gamma * g * g / denom;
    approx.mixing = g / delta_a;
    approx.coupling_minus = gamma * g * delta_a / denom;
    return approx;
}

std::vector<Valley> extract_valley_widths(std::span<const SpectrumSample> spectrum) {
    std::vector<Valley> valleys;
    if (spectrum.size() < 3) return valleys;

    const double baseline = 1.0;

    auto crossing = [&](std::size_t lo, std::size_t hi, double level) {
        // Linear interpolation of the x where transmission passes `level`
        // between adjacent samples lo, hi.
        const double y0 = spectrum[lo].transmission;
        const double y1 = spectrum[hi].transmission;
        const double t = (level - y0) / (y1 - y0);
        return spectrum[lo].x + t * (spectrum[hi].x - spectrum[lo].x);
    };

    for (std::size_t i = 1; i + 1 < spectrum.size(); ++i) {
        const double y = spectrum[i].transmission;
        if (!(y < spectrum[i - 1].transmission) || !(y <= spectrum[i + 1].transmission))
            continue;

        Valley valley;
        valley.center = spectrum[i].x;
        valley.depth = baseline - y;
        const double half_level = (y + baseline) / 2.0;

        // Walk outward until the spectrum climbs back through the half level.
        double left = 0.0, right = 0.0;
        bool found_left = false, found_right = false;
        for (std::size_t j = i; j > 0; --j) {
            if (spectrum[j - 1].transmission >= half_level) {
                left = crossing(j - 1, j, half_level);
                found_left = true;
                break;
            }
        }
        for (std::size_t j = i; j + 1 < spectrum.size(); ++j) {
            if (spectrum[j + 1].transmission >= half_level) {
                right = crossing(j, j + 1, half_level);
                found_right = true;
                break;
            }
        }

        if (found_left && found_right) {
            valley.fwhm = right - left;
        } else {
            valley.truncated = true;
            valley.fwhm = 0.0;
        }
        valleys.push_back(valley);
    }
    return valleys;
}

}  // namespace router
