// sweep.hpp — grid evaluation of the four-port coefficients: 1D spectra, 2D
// detuning maps, photon-number scans, and the canned figure datasets. Output is
// deterministic CSV/JSON with a parameter-provenance sidecar.

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "router/model.hpp"

namespace router {

/// One sweep axis: `points` uniformly spaced values over [min, max].
struct Axis {
    std::string name;
    double min = 0.0;
    double max = 0.0;
    int points = 0;

    double value(int i) const { return min + (max - min) * i / (points - 1); }
    void validate() const;
};

/// Up to two axes plus the fixed-parameter bundle and input port.
struct GridSpec {
    std::vector<Axis> axes;
    ValidatedSystem system;
    PortLabel input;
};

/// Ordered result rows: axis columns first, then T_p, R_p, T_pbar, R_pbar, T.
/// Metadata records the full parameter provenance of the run.
struct SweepTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> metadata;

    void write_csv(std::ostream& out) const;
    void write_json(std::ostream& out) const;
    void write_meta(std::ostream& out) const;
};

/// Worker-thread cap: ROUTER_THREADS if set, else hardware concurrency.
int worker_threads();

/// 1D spectrum over Delta_k^n at the system's fixed Delta_a.
SweepTable spectrum_1d(const Axis& delta_k_axis, const ValidatedSystem& system, PortLabel input);

/// Row-major 2D map over Delta_k^n (inner axis) x Delta_a (outer axis).
SweepTable map_2d(const Axis& delta_k_axis, const Axis& delta_a_axis,
                  const ValidatedSystem& system, PortLabel input);

/// Analytic overlays for a 2D map: the full-transmission line and pole curves.
SweepTable pit_line_overlay(const Axis& delta_a_axis);
SweepTable pole_curves_overlay(const Axis& delta_a_axis, const ValidatedSystem& system);

/// T_p(n) at fixed Delta_k^n for each listed Delta_a (long format: n, Delta_a rows).
SweepTable photon_number_scan(int n_min, int n_max, const std::vector<double>& delta_a_values,
                              const ValidatedSystem& system, PortLabel input,
                              double delta_k_n = 0.0);

/// Writes the datasets behind one published panel into `out_dir` (caption
/// parameter sets are pinned internally). Returns the written file paths.
/// Known ids: fig2, fig4a, fig4b, fig4c, fig5a, fig5b.
std::vector<std::string> reproduce_figure(const std::string& figure_id,
                                          const std::string& out_dir);

/// Writes table.csv (or .json) plus the .meta sidecar next to it.
std::vector<std::string> write_table(const SweepTable& table, const std::string& out_dir,
                                     const std::string& basename, bool json = false);

}  // namespace router
