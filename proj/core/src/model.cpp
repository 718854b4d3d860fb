// model.cpp — parameter validation and config parsing.

#include "router/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace router {

std::string port_name(PortLabel port) {
    static const char* names[4] = {"R_a", "L_a", "R_b", "L_b"};
    return names[channel_index(port)];
}

ScatterPoint ScatterPoint::from_absolute(double e_k, const EmitterParams& emitter,
                                         const CavityParams& cavity) {
    ScatterPoint pt;
    pt.delta_k_n = e_k - cavity.n * cavity.omega_a;
    pt.Delta_k_n = pt.delta_k_n - emitter.omega_2;
    pt.Delta_a = cavity.omega_a - emitter.omega_32();
    return pt;
}

ScatterPoint ScatterPoint::from_detunings(double Delta_k_n, double Delta_a, double omega_2) {
    ScatterPoint pt;
    pt.Delta_k_n = Delta_k_n;
    pt.Delta_a = Delta_a;
    pt.delta_k_n = Delta_k_n + omega_2;
    return pt;
}

namespace {

void check_couplings(const CouplingMatrix& c) {
    const std::pair<const char*, double> rates[] = {
        {"gamma_ar", c.gamma_ar}, {"gamma_al", c.gamma_al},
        {"gamma_br", c.gamma_br}, {"gamma_bl", c.gamma_bl}};
    for (const auto& [name, value] : rates) {
        if (!(value >= 0.0))
            throw ValidationError("negative coupling rate",
                                  std::string(name) + " must be >= 0, got " + std::to_string(value));
    }
    if (!(c.gamma() > 0.0))
        throw ValidationError("zero total coupling", "gamma = gamma_a + gamma_b must be > 0");
}

void check_cavity(double lambda, int n) {
    if (!(lambda >= 0.0))
        throw ValidationError("negative drive strength", "lambda must be >= 0");
    if (n < 0)
        throw ValidationError("negative photon number", "n must be a nonnegative integer");
}

}  // namespace

ValidatedSystem validate_system(const CouplingMatrix& couplings, const EmitterParams& emitter,
                                const CavityParams& cavity) {
    check_couplings(couplings);
    check_cavity(cavity.lambda, cavity.n);
    if (!(emitter.omega_2 > 0.0) || !(emitter.omega_3 > emitter.omega_2))
        throw ValidationError("cascade ordering violated",
                              "level frequencies must satisfy omega_3 > omega_2 > 0");

    ValidatedSystem sys;
    sys.couplings = couplings;
    sys.lambda = cavity.lambda;
    sys.n = cavity.n;
    sys.delta_a = cavity.omega_a - emitter.omega_32();
    sys.emitter = emitter;
    sys.cavity_absolute = cavity;

    // Regime guards from the model's validity assumptions; deliberately warnings only.
    const double drive = std::sqrt(static_cast<double>(cavity.n)) * cavity.lambda;
    const double scale = std::min(cavity.omega_a, emitter.omega_32());
    if (drive >= 0.1 * scale)
        sys.warnings.push_back("sqrt(n)*lambda = " + std::to_string(drive) +
                               " is not small against min(omega_a, omega_32) = " +
                               std::to_string(scale));
    if (std::abs(sys.delta_a) >= 0.1 * (cavity.omega_a + emitter.omega_32()))
        sys.warnings.push_back("|Delta_a| = " + std::to_string(std::abs(sys.delta_a)) +
                               " is not small against omega_a + omega_32");
    return sys;
}

ValidatedSystem validate_system(const CouplingMatrix& couplings, double lambda, int n,
                                double delta_a) {
    check_couplings(couplings);
    check_cavity(lambda, n);

    ValidatedSystem sys;
    sys.couplings = couplings;
    sys.lambda = lambda;
    sys.n = n;
    sys.delta_a = delta_a;
    return sys;
}

SystemConfig SystemConfig::defaults() {
    SystemConfig cfg;
    cfg.gamma_ar = 0.5;
    cfg.gamma_al = 0.3;
    cfg.gamma_br = 0.1;
    cfg.gamma_bl = 0.1;
    cfg.lambda = 1.0;
    cfg.n = 1;
    cfg.delta_a = 0.0;
    return cfg;
}

namespace {

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ValidationError("malformed value", "key '" + key + "': cannot parse '" + value +
                                                     "' as a real number");
    }
}

int parse_photon_number(const std::string& value) {
    // n is an exact Fock photon number; reject non-integers rather than truncating.
    try {
        std::size_t pos = 0;
        double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        double rounded = std::round(v);
        if (v != rounded)
            throw ValidationError("non-integer photon number",
                                  "n must be an integer Fock number, got '" + value + "'");
        return static_cast<int>(rounded);
    } catch (const ValidationError&) {
        throw;
    } catch (const std::exception&) {
        throw ValidationError("malformed value", "key 'n': cannot parse '" + value + "'");
    }
}

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

void SystemConfig::set(const std::string& key, const std::string& value) {
    if (key == "gamma_ar") gamma_ar = parse_double(key, value);
    else if (key == "gamma_al") gamma_al = parse_double(key, value);
    else if (key == "gamma_br") gamma_br = parse_double(key, value);
    else if (key == "gamma_bl") gamma_bl = parse_double(key, value);
    else if (key == "omega_2") omega_2 = parse_double(key, value);
    else if (key == "omega_3") omega_3 = parse_double(key, value);
    else if (key == "omega_a") omega_a = parse_double(key, value);
    else if (key == "lambda") lambda = parse_double(key, value);
    else if (key == "n") n = parse_photon_number(value);
    else if (key == "Delta_a") delta_a = parse_double(key, value);
    else
        throw ValidationError("unknown key", "unknown config key '" + key + "'");
}

ValidatedSystem SystemConfig::finalize() const {
    SystemConfig merged = defaults();
    auto take = [](auto& dst, const auto& src) { if (src) dst = src; };
    take(merged.gamma_ar, gamma_ar);
    take(merged.gamma_al, gamma_al);
    take(merged.gamma_br, gamma_br);
    take(merged.gamma_bl, gamma_bl);
    take(merged.omega_2, omega_2);
    take(merged.omega_3, omega_3);
    take(merged.omega_a, omega_a);
    take(merged.lambda, lambda);
    take(merged.n, n);
    take(merged.delta_a, delta_a);

    CouplingMatrix couplings{*merged.gamma_ar, *merged.gamma_al, *merged.gamma_br,
                             *merged.gamma_bl};

    const bool any_absolute = omega_2 || omega_3 || omega_a;
    if (any_absolute) {
        if (!(omega_2 && omega_3 && omega_a))
            throw ValidationError("incomplete absolute frequencies",
                                  "absolute configs must supply omega_2, omega_3 and omega_a");
        if (delta_a)
            throw ValidationError("conflicting detuning",
                                  "supply either Delta_a or absolute frequencies, not both");
        EmitterParams emitter{*merged.omega_2, *merged.omega_3};
        CavityParams cavity{*merged.omega_a, *merged.lambda, *merged.n};
        return validate_system(couplings, emitter, cavity);
    }
    return validate_system(couplings, *merged.lambda, *merged.n, *merged.delta_a);
}

void parse_config(std::istream& in, SystemConfig& config) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string body = trim(line);
        if (body.empty()) continue;
        auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ValidationError("malformed line", "line " + std::to_string(lineno) +
                                                        ": expected 'key = value'");
        config.set(trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
    }
}

void parse_config_file(const std::string& path, SystemConfig& config) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("unreadable config", "cannot open config file '" + path + "'");
    parse_config(in, config);
}

std::pair<std::string, std::string> split_override(const std::string& assignment) {
    auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
        throw ValidationError("malformed override",
                              "override must look like key=value, got '" + assignment + "'");
    return {trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1))};
}

}  // namespace router
