// acceptance.cpp — end-to-end acceptance gate. Each numbered check prints one
// PASS/FAIL line; the process exits nonzero if any check fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "router/dressed.hpp"
#include "router/mode_transform.hpp"
#include "router/model.hpp"
#include "router/oracle.hpp"
#include "router/scattering.hpp"
#include "router/sweep.hpp"

using namespace router;

namespace {

int g_failed = 0;

void report(int number, const char* title, bool ok, const std::string& detail) {
    std::printf("[%s] %2d. %s — %s\n", ok ? "PASS" : "FAIL", number, title, detail.c_str());
    if (!ok) ++g_failed;
}

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

const CouplingMatrix kRoutingSet{0.5, 0.3, 0.1, 0.1};  // gamma_pg/gamma = 1/2, lambda = gamma
const PortLabel kInput{Waveguide::A, Direction::Right};

// 1. Flux conservation on a 10^4-point random parameter grid.
void criterion_1() {
    std::mt19937_64 rng(2026);
    std::uniform_real_distribution<double> rate(1e-6, 1.0);
    std::uniform_real_distribution<double> detuning(-10.0, 10.0);
    std::uniform_real_distribution<double> drive(1e-6, 2.0);
    std::uniform_int_distribution<int> photons(0, 20);

    const auto start = std::chrono::steady_clock::now();
    double worst_sum = 0.0, worst_mod = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const CouplingMatrix c{rate(rng), rate(rng), rate(rng), rate(rng)};
        const CavityParams cavity{0.0, drive(rng), photons(rng)};
        const ScatterPoint pt = ScatterPoint::from_detunings(detuning(rng), detuning(rng));
        worst_mod = std::max(worst_mod,
                             std::abs(std::abs(even_transmission(pt, cavity, c.gamma())) - 1.0));
        for (PortLabel port : all_ports()) {
            const FourPortResult r = four_port(pt, cavity, c, port);
            worst_sum = std::max(worst_sum, std::abs(r.probability_sum() - 1.0));
        }
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    report(1, "flux conservation on 10^4 random points",
           worst_sum < 1e-12 && worst_mod < 1e-12 && seconds < 1.0,
           fmt("max |sum-1| = %.3g, max ||t_ke|-1| = %.3g, %.2f s", worst_sum, worst_mod,
               seconds));
}

// 2. Full transmission on the line Delta_k^n = -Delta_a.
void criterion_2() {
    std::mt19937_64 rng(2027);
    std::uniform_real_distribution<double> detuning(-10.0, 10.0);
    const CavityParams cavity{0.0, 1.0, 1};
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double da = detuning(rng);
        const FourPortResult r =
            four_port(ScatterPoint::from_detunings(-da, da), cavity, kRoutingSet, kInput);
        worst = std::max(worst, std::abs(r.transmission() - 1.0));
    }
    report(2, "full transmission on the induced-transparency line", worst < 1e-12,
           fmt("max |T_p - 1| = %.3g over 100 random Delta_a", worst));
}

// 3. Routing maxima at the pole roots: R_p = 0.6, T = 0.4, T_p = 0.
void criterion_3() {
    std::mt19937_64 rng(2028);
    std::uniform_real_distribution<double> detuning(-10.0, 10.0);
    const CavityParams cavity{0.0, 1.0, 1};
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double da = detuning(rng);
        const SpecialPoints pts = special_points(da, cavity);
        for (double root : pts.pole_roots) {
            const FourPortResult r =
                four_port(ScatterPoint::from_detunings(root, da), cavity, kRoutingSet, kInput);
            worst = std::max({worst, std::abs(r.transmission()),
                              std::abs(r.reflection() - 0.6), std::abs(r.transfer() - 0.4)});
        }
    }
    report(3, "routing maxima R_p = 0.6, T = 0.4 at both pole roots", worst < 1e-10,
           fmt("max deviation = %.3g over 20 random Delta_a", worst));
}

// 4. n = 0 collapses to the two-level spectrum.
void criterion_4() {
    const CavityParams empty{0.0, 1.0, 0};
    double worst = 0.0;
    for (int i = 0; i <= 800; ++i) {
        const double dk = -6.0 + 12.0 * i / 800;
        const Complex u =
            scattering_factor(ScatterPoint::from_detunings(dk, 0.0), empty, 1.0);
        const Complex two_level = Complex(0.0, -1.0) / Complex(dk, 0.5);
        worst = std::max(worst, std::abs(u - two_level));
    }
    const FourPortResult resonant =
        four_port(ScatterPoint::from_detunings(0.0, 0.0), empty, kRoutingSet, kInput);
    const double t_expected = std::norm(1.0 - 2.0 * 0.5);  // |1 - 2 gamma_pg/gamma|^2
    const double t_err = std::abs(resonant.transmission() - t_expected);
    report(4, "two-level limit at n = 0", worst < 1e-12 && t_err < 1e-12,
           fmt("max spectral deviation = %.3g, resonant T_p error = %.3g", worst, t_err));
}

// 5. Pole roots equal the negated dressed energies; linewidths sum to gamma.
void criterion_5() {
    std::mt19937_64 rng(2029);
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
    report(5, "dressed-pole correspondence and linewidth sum rule",
           worst_root < 1e-12 && worst_sum < 1e-12,
           fmt("max root deviation = %.3g, max |sum - gamma| = %.3g", worst_root, worst_sum));
}

// 6. Large-detuning linewidths within 2% at Delta_a = 10 sqrt(n) lambda.
void criterion_6() {
    double worst = 0.0;
    for (int n : {1, 4, 9}) {
        const CavityParams cavity{0.0, 1.0, n};
        const double da = 10.0 * std::sqrt(static_cast<double>(n));
        const DressedPair exact = dressed_pair(da, cavity, 1.0);
        const LargeDetuningApprox approx = large_detuning_approx(da, cavity, 1.0);
        worst = std::max({worst,
                          std::abs(approx.gamma_plus - exact.gamma_plus) / exact.gamma_plus,
                          std::abs(approx.gamma_minus - exact.gamma_minus) / exact.gamma_minus});
    }
    report(6, "large-detuning linewidths within 2%", worst < 0.02,
           fmt("max relative error = %.4g at Delta_a = 10 sqrt(n) lambda", worst));
}

// 7. Valley widths: right valley's half-width stays under gamma/2 and grows
//    toward it; left valley's full width tracks gamma_-.
void criterion_7() {
    const std::vector<double> da_values{1.5, 4.0, 8.0, 16.0};
    const CavityParams cavity{0.0, 1.0, 1};
    std::vector<double> right_halfwidths;
    bool left_ok = true;
    std::string detail;

    for (double da : da_values) {
        const SpecialPoints pts = special_points(da, cavity);
        const DressedPair pair = dressed_pair(da, cavity, 1.0);

        auto sample_valley = [&](double center, double halfspan) {
            std::vector<SpectrumSample> spectrum;
            for (int i = 0; i <= 20000; ++i) {
                const double x = center - halfspan + 2.0 * halfspan * i / 20000;
                const FourPortResult r = four_port(ScatterPoint::from_detunings(x, da), cavity,
                                                   kRoutingSet, kInput);
                spectrum.push_back({x, r.transmission()});
            }
            const auto valleys = extract_valley_widths(spectrum);
            Valley nearest{};
            double best = 1e300;
            for (const Valley& v : valleys)
                if (std::abs(v.center - center) < best) {
                    best = std::abs(v.center - center);
                    nearest = v;
                }
            return nearest;
        };

        // Right valley (at -e_plus): half-width at half-depth.
        const Valley right = sample_valley(pts.pole_roots[1], 1.2);
        right_halfwidths.push_back(right.fwhm / 2.0);

        // Left valley (at -e_minus): full width against gamma_-.
        if (da >= 8.0) {
            const Valley left = sample_valley(pts.pole_roots[0], std::max(0.2, 6.0 * pair.gamma_minus));
            const double rel = std::abs(left.fwhm - pair.gamma_minus) / pair.gamma_minus;
            left_ok = left_ok && rel < 0.15;
            detail += fmt(" left(%g): %.3g%%;", da, 100.0 * rel);
        }
    }

    bool right_ok = true;
    for (std::size_t i = 0; i < right_halfwidths.size(); ++i) {
        right_ok = right_ok && right_halfwidths[i] < 0.5;
        if (i > 0) right_ok = right_ok && right_halfwidths[i] > right_halfwidths[i - 1];
    }
    std::string widths = "right half-widths:";
    for (double w : right_halfwidths) widths += fmt(" %.4f", w);
    report(7, "valley widths bounded by gamma/2 and tracking gamma_-", right_ok && left_ok,
           widths + ";" + detail);
}

// 8. T_p(n) strictly increasing, known value at n = 1, saturation by n = 250.
void criterion_8() {
    bool increasing = true;
    for (double da : {1.0, 5.0, 10.0}) {
        double previous = -1.0;
        for (int n = 0; n <= 50; ++n) {
            const CavityParams cavity{0.0, 1.0, n};
            const double t = four_port(ScatterPoint::from_detunings(0.0, da), cavity,
                                       kRoutingSet, kInput)
                                 .transmission();
            increasing = increasing && t > previous;
            previous = t;
        }
    }

    const double t1 = four_port(ScatterPoint::from_detunings(0.0, 1.0),
                                CavityParams{0.0, 1.0, 1}, kRoutingSet, kInput)
                          .transmission();
    const double t250 = four_port(ScatterPoint::from_detunings(0.0, 1.0),
                                  CavityParams{0.0, 1.0, 250}, kRoutingSet, kInput)
                            .transmission();

    int crossover = -1;
    for (int n = 1; n <= 250 && crossover < 0; ++n) {
        const double t = four_port(ScatterPoint::from_detunings(0.0, 1.0),
                                   CavityParams{0.0, 1.0, n}, kRoutingSet, kInput)
                             .transmission();
        if (t >= 0.99) crossover = n;
    }

    report(8, "photon-number trend of the resonant transmission",
           increasing && std::abs(t1 - 0.8) < 1e-12 && t250 > 0.99 && crossover == 5,
           fmt("T_p(1) = %.12f, T_p(250) = %.6f, T_p >= 0.99 first at n = %d", t1, t250,
               crossover));
}

// 9. Brute-force dynamics vs the closed form, plus decay calibration.
void criterion_9() {
    const auto start = std::chrono::steady_clock::now();

    struct Job {
        int n;
        double delta_a;
    };
    const std::vector<Job> jobs{{0, 0.0}, {1, 0.0}, {1, 1.5}};
    const std::vector<double> carriers{-2.0, -1.0, 0.0, 1.0, 2.0};

    double worst = 0.0;
    std::string worst_at;
    for (const Job& job : jobs) {
        for (double carrier : carriers) {
            OracleConfig cfg = OracleConfig::for_carrier(carrier, 1.0);
            cfg.n_modes = 2048;
            const VerifyReport rep = verify_against_closed_form(
                cfg, CavityParams{0.0, 1.0, job.n}, job.delta_a, 1.0);
            if (rep.max_abs_error > worst) {
                worst = rep.max_abs_error;
                worst_at = fmt("n=%d Delta_a=%g carrier=%g", job.n, job.delta_a, carrier);
            }
        }
    }

    OracleConfig decay_cfg = OracleConfig::for_carrier(0.0, 1.0);
    const auto decay = decay_calibration(decay_cfg, 1.0, 12, 3.0);
    double worst_decay = 0.0;
    for (const auto& [t, population] : decay)
        worst_decay = std::max(worst_decay,
                               std::abs(population - std::exp(-t)) / std::exp(-t));

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(9, "wavepacket dynamics agree with the closed form",
           worst < 0.02 && worst_decay < 0.01 && seconds < 120.0,
           fmt("max |t_est - t_ke| = %.4g (%s), decay error = %.3g%%, %.1f s", worst,
               worst_at.c_str(), 100.0 * worst_decay, seconds));
}

// 10. Byte-identical figure datasets across repeated CLI runs.
void criterion_10() {
    namespace fs = std::filesystem;
    const fs::path base = fs::temp_directory_path() / "router_acceptance";
    const fs::path run_a = base / "a";
    const fs::path run_b = base / "b";
    std::error_code ec;
    fs::remove_all(base, ec);

    const std::string cli = ROUTER_CLI_PATH;
    const std::string cmd_a = cli + " figure fig2 --out " + run_a.string() + " 2>/dev/null";
    const std::string cmd_b = cli + " figure fig2 --out " + run_b.string() + " 2>/dev/null";
    const bool ran = std::system(cmd_a.c_str()) == 0 && std::system(cmd_b.c_str()) == 0;

    bool identical = ran;
    int compared = 0;
    if (ran) {
        for (const auto& entry : fs::directory_iterator(run_a)) {
            std::ifstream a(entry.path(), std::ios::binary);
            std::ifstream b(run_b / entry.path().filename(), std::ios::binary);
            std::ostringstream sa, sb;
            sa << a.rdbuf();
            sb << b.rdbuf();
            identical = identical && b.good() && sa.str() == sb.str() && !sa.str().empty();
            ++compared;
        }
    }
    report(10, "repeated figure runs are byte-identical", identical && compared >= 10,
           fmt("%d files compared%s", compared, ran ? "" : " (CLI run failed)"));
    fs::remove_all(base, ec);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();

    if (g_failed != 0) {
        std::printf("%d acceptance check(s) FAILED\n", g_failed);
        return 1;
    }
    std::printf("all acceptance checks passed\n");
    return 0;
}
