// selftest.cpp — cross-module invariant checks, runnable from the shipped binary.

#include "selftest.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "router/dressed.hpp"
#include "router/mode_transform.hpp"
#include "router/model.hpp"
#include "router/oracle.hpp"
#include "router/scattering.hpp"
#include "router/sweep.hpp"

namespace router::selftest {

namespace {

int g_failures = 0;

void check(const char* name, bool ok, double worst = -1.0) {
    if (worst >= 0.0)
        std::fprintf(stderr, "[%s] %s (worst %.3g)\n", ok ? "ok" : "FAIL", name, worst);
    else
        std::fprintf(stderr, "[%s] %s\n", ok ? "ok" : "FAIL", name);
    if (!ok) ++g_failures;
}

CouplingMatrix random_couplings(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> rate(1e-3, 1.0);
    return CouplingMatrix{rate(rng), rate(rng), rate(rng), rate(rng)};
}

void parity_orthogonality() {
    std::mt19937_64 rng(11);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i)
        worst = std::max(worst, build_parity_basis(random_couplings(rng)).orthogonality_defect());
    check("parity basis orthogonal over 1000 random draws", worst < 1e-12, worst);
}

void conservation_grid() {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> rate(1e-3, 1.0);
    std::uniform_real_distribution<double> detuning(-10.0, 10.0);
    std::uniform_real_distribution<double> drive(1e-3, 2.0);
    std::uniform_int_distribution<int> photons(0, 20);

    double worst_sum = 0.0, worst_mod = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const CouplingMatrix c{rate(rng), rate(rng), rate(rng), rate(rng)};
        const CavityParams cavity{0.0, drive(rng), photons(rng)};
        const ScatterPoint pt = ScatterPoint::from_detunings(detuning(rng), detuning(rng));
        worst_mod = std::max(
            worst_mod, std::abs(std::abs(even_transmission(pt, cavity, c.gamma())) - 1.0));
        for (PortLabel port : all_ports()) {
            const FourPortResult r = four_port(pt, cavity, c, port);
            worst_sum = std::max(worst_sum, std::abs(r.probability_sum() - 1.0));
        }
    }
    check("probability conservation on 10^4 random points", worst_sum < 1e-12, worst_sum);
    check("|t_ke| = 1 on the same grid", worst_mod < 1e-12, worst_mod);
}

void pit_and_pole_identities() {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> detuning(-10.0, 10.0);
    const CouplingMatrix c{0.5, 0.3, 0.1, 0.1};
    const PortLabel input{Waveguide::A, Direction::Right};

    double worst_pit = 0.0, worst_pole = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double da = detuning(rng);
        const CavityParams cavity{0.0, 1.0, 1};
        const FourPortResult pit =
            four_port(ScatterPoint::from_detunings(-da, da), cavity, c, input);
        worst_pit = std::max(worst_pit, std::abs(pit.transmission() - 1.0));

        const SpecialPoints pts = special_points(da, cavity);
        for (double root : pts.pole_roots) {
            const FourPortResult pole =
                four_port(ScatterPoint::from_detunings(root, da), cavity, c, input);
            const double r_expected = 4.0 * c.gamma_ar * c.gamma_al / (c.gamma() * c.gamma());
            worst_pole = std::max(worst_pole, std::abs(pole.transmission()));
            worst_pole = std::max(worst_pole, std::abs(pole.reflection() - r_expected));
        }
    }
    check("full transmission on the PIT line (100 random Delta_a)", worst_pit == 0.0, worst_pit);
    check("pole roots give T_p = 0, R_p = 4 g_pg g_pgbar / g^2", worst_pole < 1e-10, worst_pole);
}

void two_level_reduction() {
    const CavityParams cavity{0.0, 1.3, 0};
    double worst = 0.0;
    for (int i = 0; i <= 800; ++i) {
        const double dk = -6.0 + 12.0 * i / 800;
        const Complex u =
            scattering_factor(ScatterPoint::from_detunings(dk, 0.7), cavity, 1.0);
        const Complex two_level = Complex(0.0, -1.0) / Complex(dk, 0.5);
        worst = std::max(worst, std::abs(u - two_level));
    }
    check("n = 0 reduces to the two-level scattering factor", worst < 1e-12, worst);
}

void dressed_pole_correspondence() {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> detuning(-8.0, 8.0);
    std::uniform_real_distribution<double> drive(0.05, 2.0);
    std::uniform_int_distribution<int> photons(1, 20);

    double worst_root = 0.0, worst_sum = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double da = detuning(rng);
        const CavityParams cavity{0.0, drive(rng), photons(rng)};
        const DressedPair pair = dressed_pair(da, cavity, 1.0);
        const SpecialPoints pts = special_points(da, cavity);
        const double lo = std::min(-pair.e_plus, -pair.e_minus);
        const double hi = std::max(-pair.e_plus, -pair.e_minus);
        worst_root = std::max({worst_root, std::abs(pts.pole_roots[0] - lo),
                               std::abs(pts.pole_roots[1] - hi)});
        worst_sum = std::max(worst_sum, std::abs(pair.gamma_plus + pair.gamma_minus - 1.0));
    }
    check("pole roots equal the negated dressed energies", worst_root < 1e-12, worst_root);
    check("gamma_+ + gamma_- = gamma", worst_sum < 1e-12, worst_sum);
}

void sweep_determinism() {
    const ValidatedSystem sys = SystemConfig::defaults().finalize();
    const Axis axis{"Delta_k_n", -6.0, 6.0, 801};
    const PortLabel input{Waveguide::A, Direction::Right};
    std::ostringstream a, b;
    spectrum_1d(axis, sys, input).write_csv(a);
    spectrum_1d(axis, sys, input).write_csv(b);
    check("1D sweep is byte-deterministic", a.str() == b.str());

    double worst_sym = 0.0;
    const SweepTable table = spectrum_1d(axis, sys, input);
    for (int i = 0; i <= 400; ++i) {
        const double left = table.rows[i][1];
        const double right = table.rows[800 - i][1];
        worst_sym = std::max(worst_sym, std::abs(left - right));
    }
    check("Delta_a = 0 spectrum symmetric in Delta_k^n", worst_sym < 1e-12, worst_sym);
}

void oracle_smoke() {
    // Reduced discretization keeps the selftest under its time budget.
    OracleConfig cfg = OracleConfig::for_carrier(0.4);
    cfg.n_modes = 512;
    const VerifyReport report =
        verify_against_closed_form(cfg, CavityParams{0.0, 1.0, 1}, 0.0, 1.0);
    check("oracle matches closed form at reduced resolution", report.max_abs_error < 0.05,
          report.max_abs_error);
    check("oracle norm drift within contract", report.final_norm_drift < 1e-8,
          report.final_norm_drift);
}

}  // namespace

int run() {
    g_failures = 0;
    parity_orthogonality();
    conservation_grid();
    pit_and_pole_identities();
    two_level_reduction();
    dressed_pole_correspondence();
    sweep_determinism();
    oracle_smoke();
    return g_failures;
}

}  // namespace router::selftest
