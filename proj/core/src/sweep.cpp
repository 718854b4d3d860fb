// sweep.cpp — deterministic grid evaluation and tabular output.

#include "router/sweep.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <thread>

#include "router/scattering.hpp"
#include "router/version.hpp"

namespace router {

void Axis::validate() const {
    if (points < 2)
        throw ValidationError("degenerate axis", "axis '" + name + "' needs >= 2 points");
    if (!(min < max))
        throw ValidationError("empty axis range", "axis '" + name + "' needs min < max");
}

int worker_threads() {
    if (const char* env = std::getenv("ROUTER_THREADS")) {
        const int requested = std::atoi(env);
        if (requested >= 1) return requested;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

// Index-ordered parallel map: output slot i depends only on i, so the result is
// identical for any worker count.
void parallel_for(int count, const std::function<void(int)>& body) {
    const int workers = std::min(worker_threads(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < count; i += workers) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::vector<std::pair<std::string, std::string>> system_metadata(const ValidatedSystem& system,
                                                                 PortLabel input) {
    std::vector<std::pair<std::string, std::string>> meta;
    meta.emplace_back("tool_version", kVersion);
    const auto& c = system.couplings;
    meta.emplace_back("gamma_ar", format_double(c.gamma_ar));
    meta.emplace_back("gamma_al", format_double(c.gamma_al));
    meta.emplace_back("gamma_br", format_double(c.gamma_br));
    meta.emplace_back("gamma_bl", format_double(c.gamma_bl));
    meta.emplace_back("gamma", format_double(c.gamma()));
    meta.emplace_back("lambda", format_double(system.lambda));
    meta.emplace_back("n", std::to_string(system.n));
    meta.emplace_back("Delta_a", format_double(system.delta_a));
    if (system.emitter) {
        meta.emplace_back("omega_2", format_double(system.emitter->omega_2));
        meta.emplace_back("omega_3", format_double(system.emitter->omega_3));
        meta.emplace_back("omega_a", format_double(system.cavity_absolute->omega_a));
    }
    meta.emplace_back("input_port", port_name(input));
    return meta;
}

void append_axis_metadata(SweepTable& table, const Axis& axis) {
    table.metadata.emplace_back("axis_" + axis.name,
                                format_double(axis.min) + ".." + format_double(axis.max) + " x " +
                                    std::to_string(axis.points));
}

std::vector<double> evaluate_row(const ScatterPoint& point, const ValidatedSystem& system,
                                 PortLabel input) {
    const FourPortResult result = four_port(point, system, input);
    assert(std::abs(result.probability_sum() - 1.0) < 1e-9);
    return {result.transmission(), result.reflection(), result.transmission_other(),
            result.reflection_other(), result.transfer()};
}

const std::vector<std::string> kCoefficientColumns = {"T_p", "R_p", "T_pbar", "R_pbar", "T"};

}  // namespace

void SweepTable::write_csv(std::ostream& out) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << format_double(row[i]);
        out << '\n';
    }
}

void SweepTable::write_json(std::ostream& out) const {
    out << "{\n  \"metadata\": {";
    for (std::size_t i = 0; i < metadata.size(); ++i)
        out << (i ? ", " : "") << '"' << metadata[i].first << "\": \"" << metadata[i].second
            << '"';
    out << "},\n  \"rows\": [\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out << "    {";
        for (std::size_t i = 0; i < rows[r].size(); ++i)
            out << (i ? ", " : "") << '"' << columns[i] << "\": " << format_double(rows[r][i]);
        out << (r + 1 < rows.size() ? "},\n" : "}\n");
    }
    out << "  ]\n}\n";
}

void SweepTable::write_meta(std::ostream& out) const {
    for (const auto& [key, value] : metadata) out << key << " = " << value << '\n';
}

SweepTable spectrum_1d(const Axis& delta_k_axis, const ValidatedSystem& system,
                       PortLabel input) {
    delta_k_axis.validate();

    SweepTable table;
    table.columns = {delta_k_axis.name};
    table.columns.insert(table.columns.end(), kCoefficientColumns.begin(),
                         kCoefficientColumns.end());
    table.rows.resize(delta_k_axis.points);

    parallel_for(delta_k_axis.points, [&](int i) {
        const double dk = delta_k_axis.value(i);
        const ScatterPoint point = ScatterPoint::from_detunings(dk, system.delta_a);
        std::vector<double> row = {dk};
        const auto coeffs = evaluate_row(point, system, input);
        row.insert(row.end(), coeffs.begin(), coeffs.end());
        table.rows[i] = std::move(row);
    });

    table.metadata = system_metadata(system, input);
    append_axis_metadata(table, delta_k_axis);
    return table;
}

SweepTable map_2d(const Axis& delta_k_axis, const Axis& delta_a_axis,
                  const ValidatedSystem& system, PortLabel input) {
    delta_k_axis.validate();
    delta_a_axis.validate();

    SweepTable table;
    table.columns = {delta_k_axis.name, delta_a_axis.name};
    table.columns.insert(table.columns.end(), kCoefficientColumns.begin(),
                         kCoefficientColumns.end());
    table.rows.resize(static_cast<std::size_t>(delta_k_axis.points) * delta_a_axis.points);

    // Parallel over outer (Delta_a) rows; output order is by index regardless of
    // completion order.
    parallel_for(delta_a_axis.points, [&](int j) {
        const double da = delta_a_axis.value(j);
        for (int i = 0; i < delta_k_axis.points; ++i) {
            const double dk = delta_k_axis.value(i);
            const ScatterPoint point = ScatterPoint::from_detunings(dk, da);
            std::vector<double> row = {dk, da};
            const auto coeffs = evaluate_row(point, system, input);
            row.insert(row.end(), coeffs.begin(), coeffs.end());
            table.rows[static_cast<std::size_t>(j) * delta_k_axis.points + i] = std::move(row);
        }
    });

    table.metadata = system_metadata(system, input);
    append_axis_metadata(table, delta_k_axis);
    append_axis_metadata(table, delta_a_axis);
    return table;
}

SweepTable pit_line_overlay(const Axis& delta_a_axis) {
    delta_a_axis.validate();

    SweepTable table;
    table.columns = {"Delta_a", "Delta_k_n"};
    for (int j = 0; j < delta_a_axis.points; ++j) {
        const double da = delta_a_axis.value(j);
        table.rows.push_back({da, -da});
    }
    table.metadata.emplace_back("tool_version", kVersion);
    table.metadata.emplace_back("overlay", "full-transmission line Delta_k_n = -Delta_a");
    append_axis_metadata(table, delta_a_axis);
    return table;
}

SweepTable pole_curves_overlay(const Axis& delta_a_axis, const ValidatedSystem& system) {
    delta_a_axis.validate();

    SweepTable table;
    table.columns = {"Delta_a", "root_lower", "root_upper"};
    const CavityParams cavity{0.0, system.lambda, system.n};
    for (int j = 0; j < delta_a_axis.points; ++j) {
        const double da = delta_a_axis.value(j);
        const SpecialPoints pts = special_points(da, cavity);
        table.rows.push_back({da, pts.pole_roots[0], pts.pole_roots[1]});
    }
    table.metadata.emplace_back("tool_version", kVersion);
    table.metadata.emplace_back("overlay", "zero-transmission pole curves");
    table.metadata.emplace_back("lambda", format_double(system.lambda));
    table.metadata.emplace_back("n", std::to_string(system.n));
    append_axis_metadata(table, delta_a_axis);
    return table;
}

SweepTable photon_number_scan(int n_min, int n_max, const std::vector<double>& delta_a_values,
                              const ValidatedSystem& system, PortLabel input,
                              double delta_k_n) {
    if (n_min < 0 || n_max < n_min)
        throw ValidationError("bad photon range", "need 0 <= n_min <= n_max");
    if (delta_a_values.empty())
        throw ValidationError("empty scan", "photon_number_scan needs >= 1 Delta_a value");

    SweepTable table;
    table.columns = {"n", "Delta_a"};
    table.columns.insert(table.columns.end(), kCoefficientColumns.begin(),
                         kCoefficientColumns.end());

    for (double da : delta_a_values) {
        for (int n = n_min; n <= n_max; ++n) {
            const CavityParams cavity{0.0, system.lambda, n};
            const ScatterPoint point = ScatterPoint::from_detunings(delta_k_n, da);
            const FourPortResult result =
                four_port(point, cavity, system.couplings, input);
            table.rows.push_back({static_cast<double>(n), da, result.transmission(),
                                  result.reflection(), result.transmission_other(),
                                  result.reflection_other(), result.transfer()});
        }
    }

    table.metadata = system_metadata(system, input);
    table.metadata.emplace_back("Delta_k_n", format_double(delta_k_n));
    table.metadata.emplace_back("n_range",
                                std::to_string(n_min) + ".." + std::to_string(n_max));
    return table;
}

std::vector<std::string> write_table(const SweepTable& table, const std::string& out_dir,
                                     const std::string& basename, bool json) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    const std::string data_path = (fs::path(out_dir) / (basename + (json ? ".json" : ".csv"))).string();
    const std::string meta_path = (fs::path(out_dir) / (basename + ".meta")).string();

    std::ofstream data(data_path);
    if (!data) throw std::runtime_error("cannot write " + data_path);
    json ? table.write_json(data) : table.write_csv(data);

    std::ofstream meta(meta_path);
    if (!meta) throw std::runtime_error("cannot write " + meta_path);
    table.write_meta(meta);

    return {data_path, meta_path};
}

namespace {

ValidatedSystem figure_system(int n, double delta_a) {
    // Routing parameter set used throughout the published panels:
    // gamma_pg/gamma = 1/2, gamma_pgbar/gamma = 0.3, other waveguide 0.1/0.1,
    // lambda = gamma, input R_a.
    return validate_system(CouplingMatrix{0.5, 0.3, 0.1, 0.1}, 1.0, n, delta_a);
}

constexpr PortLabel kFigureInput{Waveguide::A, Direction::Right};

SweepTable select_columns(const SweepTable& source, const std::vector<std::string>& keep) {
    SweepTable out;
    out.metadata = source.metadata;
    std::vector<std::size_t> indices;
    for (const auto& name : keep) {
        for (std::size_t i = 0; i < source.columns.size(); ++i)
            if (source.columns[i] == name) indices.push_back(i);
    }
    for (auto i : indices) out.columns.push_back(source.columns[i]);
    out.rows.reserve(source.rows.size());
    for (const auto& row : source.rows) {
        std::vector<double> slim;
        slim.reserve(indices.size());
        for (auto i : indices) slim.push_back(row[i]);
        out.rows.push_back(std::move(slim));
    }
    return out;
}

void extend(std::vector<std::string>& into, std::vector<std::string> more) {
    for (auto& p : more) into.push_back(std::move(p));
}

}  // namespace

std::vector<std::string> reproduce_figure(const std::string& figure_id,
                                          const std::string& out_dir) {
    const Axis dk_axis{"Delta_k_n", -6.0, 6.0, 801};
    const Axis da_axis{"Delta_a", -6.0, 6.0, 801};
    std::vector<std::string> written;

    if (figure_id == "fig2") {
        const Axis dk_map{"Delta_k_n", -6.0, 6.0, 401};
        const Axis da_map{"Delta_a", -6.0, 6.0, 401};
        const ValidatedSystem sys = figure_system(1, 0.0);
        const SweepTable map = map_2d(dk_map, da_map, sys, kFigureInput);

        extend(written, write_table(select_columns(map, {"Delta_k_n", "Delta_a", "T_p"}),
                                    out_dir, "fig2_transmission"));
        extend(written, write_table(select_columns(map, {"Delta_k_n", "Delta_a", "R_p"}),
                                    out_dir, "fig2_reflection"));
        extend(written, write_table(select_columns(map, {"Delta_k_n", "Delta_a", "T"}),
                                    out_dir, "fig2_transfer"));
        extend(written, write_table(pit_line_overlay(da_map), out_dir, "fig2_pit_line"));
        extend(written,
               write_table(pole_curves_overlay(da_map, sys), out_dir, "fig2_pole_curves"));
    } else if (figure_id == "fig4a") {
        const std::pair<const char*, double> panels[] = {
            {"fig4a_delta_a_0", 0.0}, {"fig4a_delta_a_1p5", 1.5}, {"fig4a_delta_a_4", 4.0}};
        for (const auto& [name, da] : panels) {
            extend(written,
                   write_table(spectrum_1d(dk_axis, figure_system(1, da), kFigureInput),
                               out_dir, name));
        }
    } else if (figure_id == "fig4b") {
        // Resonant slice: T_p at Delta_k^n = 0 against Delta_a.
        SweepTable table;
        table.columns = {"Delta_a"};
        table.columns.insert(table.columns.end(), kCoefficientColumns.begin(),
                             kCoefficientColumns.end());
        const ValidatedSystem sys = figure_system(1, 0.0);
        for (int j = 0; j < da_axis.points; ++j) {
            const double da = da_axis.value(j);
            const ScatterPoint point = ScatterPoint::from_detunings(0.0, da);
            const FourPortResult r = four_port(point, sys, kFigureInput);
            table.rows.push_back({da, r.transmission(), r.reflection(), r.transmission_other(),
                                  r.reflection_other(), r.transfer()});
        }
        table.metadata = system_metadata(sys, kFigureInput);
        table.metadata.emplace_back("Delta_k_n", "0");
        append_axis_metadata(table, da_axis);
        extend(written, write_table(table, out_dir, "fig4b"));
    } else if (figure_id == "fig4c") {
        // Large cavity detuning: photon number barely matters. Delta_a = 10 is our
        // choice (recorded here); the source panel does not state it.
        for (int n : {0, 1}) {
            extend(written,
                   write_table(spectrum_1d(dk_axis, figure_system(n, 10.0), kFigureInput),
                               out_dir, "fig4c_n" + std::to_string(n)));
        }
    } else if (figure_id == "fig5a") {
        for (int n : {0, 1, 20}) {
            extend(written,
                   write_table(spectrum_1d(dk_axis, figure_system(n, 1.0), kFigureInput),
                               out_dir, "fig5a_n" + std::to_string(n)));
        }
    } else if (figure_id == "fig5b") {
        const ValidatedSystem sys = figure_system(1, 0.0);
        extend(written, write_table(photon_number_scan(0, 50, {1.0, 5.0, 10.0}, sys,
                                                       kFigureInput, 0.0),
                                    out_dir, "fig5b"));
    } else {
        throw ValidationError("unknown figure id",
                              "figure id '" + figure_id +
                                  "' is not one of fig2, fig4a, fig4b, fig4c, fig5a, fig5b");
    }
    return written;
}

}  // namespace router
