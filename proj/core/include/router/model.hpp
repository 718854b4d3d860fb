// model.hpp — parameter containers, validation, and the flat key=value config format.
//
// Unit convention: hbar = 1, group velocity v = 1, and all rates/frequencies are
// expressed in units of the total waveguide coupling gamma unless a config supplies
// absolute level frequencies.

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace router {

/// Validation failure with a stable machine-readable name alongside the message.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

enum class Waveguide : std::uint8_t { A, B };
enum class Direction : std::uint8_t { Right, Left };

/// One of the four chiral channels: (waveguide, propagation direction).
struct PortLabel {
    Waveguide waveguide = Waveguide::A;
    Direction direction = Direction::Right;

    friend bool operator==(PortLabel, PortLabel) = default;
};

/// Channel ordering used everywhere: R_a, L_a, R_b, L_b.
constexpr int channel_index(PortLabel port) {
    int base = port.waveguide == Waveguide::A ? 0 : 2;
    return base + (port.direction == Direction::Right ? 0 : 1);
}

constexpr std::array<PortLabel, 4> all_ports() {
    return {PortLabel{Waveguide::A, Direction::Right}, PortLabel{Waveguide::A, Direction::Left},
            PortLabel{Waveguide::B, Direction::Right}, PortLabel{Waveguide::B, Direction::Left}};
}

constexpr PortLabel other_waveguide(PortLabel p) {
    return {p.waveguide == Waveguide::A ? Waveguide::B : Waveguide::A, p.direction};
}

constexpr PortLabel other_direction(PortLabel p) {
    return {p.waveguide, p.direction == Direction::Right ? Direction::Left : Direction::Right};
}

std::string port_name(PortLabel port);

/// The four chiral coupling rates gamma_pg (p in {a,b}, g in {r,l}).
struct CouplingMatrix {
    double gamma_ar = 0.0;
    double gamma_al = 0.0;
    double gamma_br = 0.0;
    double gamma_bl = 0.0;

    // Derived sums share one arithmetic path with the invariant checks.
    double gamma_a() const { return gamma_ar + gamma_al; }
    double gamma_b() const { return gamma_br + gamma_bl; }
    double gamma() const { return gamma_a() + gamma_b(); }

    double rate(PortLabel port) const {
        switch (channel_index(port)) {
            case 0: return gamma_ar;
            case 1: return gamma_al;
            case 2: return gamma_br;
            default: return gamma_bl;
        }
    }
};

/// Cascade emitter levels; ground state frequency is fixed at 0.
struct EmitterParams {
    double omega_2 = 0.0;
    double omega_3 = 0.0;

    double omega_32() const { return omega_3 - omega_2; }
};

/// Extra cavity driving the |2> <-> |3> transition with n photons.
struct CavityParams {
    double omega_a = 0.0;
    double lambda = 0.0;
    int n = 0;
};

/// Detuning bookkeeping for one incident momentum.
struct ScatterPoint {
    double delta_k_n = 0.0;  // incident eigenfrequency delta_k^n = E_k - n*omega_a = v*k
    double Delta_k_n = 0.0;  // delta_k^n - omega_2
    double Delta_a = 0.0;    // omega_a - omega_32

    static ScatterPoint from_absolute(double e_k, const EmitterParams& emitter,
                                      const CavityParams& cavity);
    static ScatterPoint from_detunings(double Delta_k_n, double Delta_a, double omega_2 = 0.0);

    /// Inverse of from_absolute for round-trip checks.
    double absolute_energy(const CavityParams& cavity) const {
        return delta_k_n + cavity.n * cavity.omega_a;
    }
};

/// Immutable parameter bundle produced by validate_system. Safe to share across threads.
struct ValidatedSystem {
    CouplingMatrix couplings;
    double lambda = 0.0;
    int n = 0;
    double delta_a = 0.0;

    // Present only for configs given in absolute frequencies.
    std::optional<EmitterParams> emitter;
    std::optional<CavityParams> cavity_absolute;

    std::vector<std::string> warnings;

    CavityParams cavity() const {
        if (cavity_absolute) return *cavity_absolute;
        return CavityParams{0.0, lambda, n};
    }
};

/// Full validation from absolute frequencies (regime guards emit warnings, not errors).
ValidatedSystem validate_system(const CouplingMatrix& couplings, const EmitterParams& emitter,
                                const CavityParams& cavity);

/// Detuning-style validation: absolute frequencies unknown, only Delta_a matters.
ValidatedSystem validate_system(const CouplingMatrix& couplings, double lambda, int n,
                                double delta_a);

// ---------------------------------------------------------------------------
// Config format: one `key = value` per line, `#` comments. Keys:
//   gamma_ar gamma_al gamma_br gamma_bl omega_2 omega_3 omega_a lambda n Delta_a
// Detuning-style configs supply Delta_a and omit the absolute frequencies.
// ---------------------------------------------------------------------------

struct SystemConfig {
    std::optional<double> gamma_ar, gamma_al, gamma_br, gamma_bl;
    std::optional<double> omega_2, omega_3, omega_a;
    std::optional<double> lambda;
    std::optional<int> n;
    std::optional<double> delta_a;

    /// Symmetric routing set used as the CLI default: gamma_pg/gamma = 1/2,
    /// gamma_pgbar/gamma = 0.3, other waveguide 0.1/0.1, lambda = gamma, n = 1.
    static SystemConfig defaults();

    /// Applies `key = value`; rejects unknown keys and malformed values.
    void set(const std::string& key, const std::string& value);

    /// Validates and freezes the configuration.
    ValidatedSystem finalize() const;
};

/// Parses the flat key=value text format into `config` (later keys win).
void parse_config(std::istream& in, SystemConfig& config);
void parse_config_file(const std::string& path, SystemConfig& config);

/// Splits a `key=value` override as passed to --set.
std::pair<std::string, std::string> split_override(const std::string& assignment);

}  // namespace router
