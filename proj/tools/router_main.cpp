// router_main.cpp — command-line front end for the four-port router toolkit.
//
// Exit codes: 0 success, 1 validation error, 2 verification failure.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "router/dressed.hpp"
#include "router/model.hpp"
#include "router/oracle.hpp"
#include "router/scattering.hpp"
#include "router/sweep.hpp"
#include "router/version.hpp"
#include "selftest.hpp"

namespace {

using namespace router;

struct CommonOptions {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_dir = ".";
    std::string format = "csv";
    std::string port = "R_a";
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("-c,--config", opts.config_path, "flat key=value config file");
    cmd->add_option("--set", opts.overrides, "override, e.g. --set Delta_a=1.5 (repeatable)");
    cmd->add_option("-o,--out", opts.out_dir, "output directory");
    cmd->add_option("--format", opts.format, "data file format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--port", opts.port, "input port")
        ->check(CLI::IsMember({"R_a", "L_a", "R_b", "L_b"}));
}

ValidatedSystem load_system(const CommonOptions& opts) {
    SystemConfig config;
    if (!opts.config_path.empty()) parse_config_file(opts.config_path, config);
    for (const auto& assignment : opts.overrides) {
        const auto [key, value] = split_override(assignment);
        config.set(key, value);
    }
    ValidatedSystem system = config.finalize();
    for (const auto& warning : system.warnings)
        std::fprintf(stderr, "warning: %s\n", warning.c_str());
    return system;
}

PortLabel parse_port(const std::string& name) {
    for (PortLabel port : all_ports())
        if (port_name(port) == name) return port;
    throw ValidationError("unknown port", "unknown input port '" + name + "'");
}

void report_written(const std::vector<std::string>& paths) {
    for (const auto& path : paths) std::fprintf(stderr, "wrote %s\n", path.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Four-port single-photon router: closed-form scattering, dressed-state "
                 "analysis, figure datasets, and brute-force verification"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    // spectrum -------------------------------------------------------------
    CommonOptions spectrum_opts;
    double sp_min = -6.0, sp_max = 6.0;
    int sp_points = 801;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "1D sweep over Delta_k^n");
    add_common(spectrum_cmd, spectrum_opts);
    spectrum_cmd->add_option("--min", sp_min, "axis minimum (units of gamma)");
    spectrum_cmd->add_option("--max", sp_max, "axis maximum");
    spectrum_cmd->add_option("--points", sp_points, "sample count");

    // map2d ------------------------------------------------------------------
    CommonOptions map_opts;
    double mk_min = -6.0, mk_max = 6.0, ma_min = -6.0, ma_max = 6.0;
    int mk_points = 401, ma_points = 401;
    auto* map_cmd = app.add_subcommand("map2d", "2D sweep over Delta_k^n x Delta_a");
    add_common(map_cmd, map_opts);
    map_cmd->add_option("--min", mk_min, "Delta_k^n minimum");
    map_cmd->add_option("--max", mk_max, "Delta_k^n maximum");
    map_cmd->add_option("--points", mk_points, "Delta_k^n sample count");
    map_cmd->add_option("--da-min", ma_min, "Delta_a minimum");
    map_cmd->add_option("--da-max", ma_max, "Delta_a maximum");
    map_cmd->add_option("--da-points", ma_points, "Delta_a sample count");

    // nscan ------------------------------------------------------------------
    CommonOptions nscan_opts;
    int ns_min = 0, ns_max = 50;
    double ns_delta_k = 0.0;
    std::vector<double> ns_delta_a = {1.0, 5.0, 10.0};
    auto* nscan_cmd = app.add_subcommand("nscan", "T_p against cavity photon number");
    add_common(nscan_cmd, nscan_opts);
    nscan_cmd->add_option("--n-min", ns_min, "first photon number");
    nscan_cmd->add_option("--n-max", ns_max, "last photon number");
    nscan_cmd->add_option("--delta-k", ns_delta_k, "fixed Delta_k^n");
    nscan_cmd->add_option("--delta-a", ns_delta_a, "Delta_a values (repeatable)");

    // dressed ----------------------------------------------------------------
    CommonOptions dressed_opts;
    auto* dressed_cmd =
        app.add_subcommand("dressed", "dressed pair, Rabi splitting, effective linewidths");
    add_common(dressed_cmd, dressed_opts);

    // points -----------------------------------------------------------------
    CommonOptions points_opts;
    auto* points_cmd =
        app.add_subcommand("points", "analytic full-transmission line and pole roots");
    add_common(points_cmd, points_opts);

    // verify -----------------------------------------------------------------
    CommonOptions verify_opts;
    std::vector<double> verify_carriers;
    int verify_modes = 2048;
    double verify_tolerance = 0.02;
    auto* verify_cmd =
        app.add_subcommand("verify", "brute-force wavepacket check of the closed form");
    add_common(verify_cmd, verify_opts);
    verify_cmd->add_option("--carrier", verify_carriers,
                           "carrier detunings (default: 5 carriers in [-2, 2])");
    verify_cmd->add_option("--n-modes", verify_modes, "momentum grid size");
    verify_cmd->add_option("--tolerance", verify_tolerance, "max |t_est - t_closed| allowed");

    // figure -----------------------------------------------------------------
    CommonOptions figure_opts;
    std::string figure_id;
    auto* figure_cmd = app.add_subcommand("figure", "emit a published panel's dataset");
    figure_cmd->add_option("id", figure_id, "fig2, fig4a, fig4b, fig4c, fig5a or fig5b")
        ->required();
    add_common(figure_cmd, figure_opts);

    // selftest -----------------------------------------------------------
    auto* selftest_cmd = app.add_subcommand("selftest", "run every module's invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : 1;  // bad invocation is a validation error
    }

    try {
        if (spectrum_cmd->parsed()) {
            const ValidatedSystem system = load_system(spectrum_opts);
            const Axis axis{"Delta_k_n", sp_min, sp_max, sp_points};
            const SweepTable table =
                spectrum_1d(axis, system, parse_port(spectrum_opts.port));
            report_written(write_table(table, spectrum_opts.out_dir, "spectrum",
                                       spectrum_opts.format == "json"));
        } else if (map_cmd->parsed()) {
            const ValidatedSystem system = load_system(map_opts);
            const Axis dk_axis{"Delta_k_n", mk_min, mk_max, mk_points};
            const Axis da_axis{"Delta_a", ma_min, ma_max, ma_points};
            const PortLabel input = parse_port(map_opts.port);
            const bool json = map_opts.format == "json";
            report_written(
                write_table(map_2d(dk_axis, da_axis, system, input), map_opts.out_dir,
                            "map2d", json));
            report_written(
                write_table(pit_line_overlay(da_axis), map_opts.out_dir, "pit_line", json));
            report_written(write_table(pole_curves_overlay(da_axis, system), map_opts.out_dir,
                                       "pole_curves", json));
        } else if (nscan_cmd->parsed()) {
            const ValidatedSystem system = load_system(nscan_opts);
            const SweepTable table = photon_number_scan(
                ns_min, ns_max, ns_delta_a, system, parse_port(nscan_opts.port), ns_delta_k);
            report_written(
                write_table(table, nscan_opts.out_dir, "nscan", nscan_opts.format == "json"));
        } else if (dressed_cmd->parsed()) {
            const ValidatedSystem system = load_system(dressed_opts);
            const DressedPair pair = dressed_pair(system);
            std::printf("Omega_n = %.12g\n", pair.omega_n);
            std::printf("E_plus = %.12g\nE_minus = %.12g\n", pair.e_plus, pair.e_minus);
            std::printf("gamma_plus = %.12g\ngamma_minus = %.12g\n", pair.gamma_plus,
                        pair.gamma_minus);
            if (pair.two_level_limit) std::printf("regime = two-level limit\n");
            if (system.delta_a != 0.0) {
                const auto approx = large_detuning_approx(
                    system.delta_a, CavityParams{0.0, system.lambda, system.n},
                    system.couplings.gamma());
                std::printf("approx_gamma_plus = %.12g\napprox_gamma_minus = %.12g\n",
                            approx.gamma_plus, approx.gamma_minus);
                std::printf("mixing = %.12g\n", approx.mixing);
            }
        } else if (points_cmd->parsed()) {
            const ValidatedSystem system = load_system(points_opts);
            const SpecialPoints pts = special_points(
                system.delta_a, CavityParams{0.0, system.lambda, system.n});
            std::printf("pit_line Delta_k_n = %.12g\n", pts.pit_line);
            std::printf("pole_roots = %.12g %.12g\n", pts.pole_roots[0], pts.pole_roots[1]);
        } else if (verify_cmd->parsed()) {
            const ValidatedSystem system = load_system(verify_opts);
            if (verify_carriers.empty()) verify_carriers = {-2.0, -1.0, 0.0, 1.0, 2.0};
            const double gamma = system.couplings.gamma();
            const CavityParams cavity{0.0, system.lambda, system.n};

            double worst = 0.0;
            int index = 0;
            for (double carrier : verify_carriers) {
                OracleConfig cfg = OracleConfig::for_carrier(carrier, gamma);
                cfg.n_modes = verify_modes;
                const VerifyReport report =
                    verify_against_closed_form(cfg, cavity, system.delta_a, gamma);

                namespace fs = std::filesystem;
                fs::create_directories(verify_opts.out_dir);
                const std::string path =
                    (fs::path(verify_opts.out_dir) / ("verify_" + std::to_string(index++) + ".csv"))
                        .string();
                std::ofstream out(path);
                report.write_csv(out);
                std::fprintf(stderr, "carrier %.4g: max error %.4g -> %s\n", carrier,
                             report.max_abs_error, path.c_str());
                worst = std::max(worst, report.max_abs_error);
            }
            if (!(worst < verify_tolerance)) {
                std::fprintf(stderr, "verification FAILED: max error %.4g >= %.4g\n", worst,
                             verify_tolerance);
                return 2;
            }
            std::fprintf(stderr, "verification passed: max error %.4g\n", worst);
        } else if (figure_cmd->parsed()) {
            report_written(reproduce_figure(figure_id, figure_opts.out_dir));
        } else if (selftest_cmd->parsed()) {
            const int failures = selftest::run();
            if (failures != 0) {
                std::fprintf(stderr, "selftest: %d check(s) FAILED\n", failures);
                return 2;
            }
            std::fprintf(stderr, "selftest: all checks passed\n");
        }
    } catch (const ValidationError& err) {
        std::fprintf(stderr, "error (%s): %s\n", err.name().c_str(), err.what());
        return 1;
    } catch (const std::exception& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 2;
    }
    return 0;
}
