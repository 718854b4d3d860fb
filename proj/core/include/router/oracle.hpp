// oracle.hpp — brute-force verification of the closed-form even-mode transmission:
// the single-excitation Hamiltonian on a truncated momentum grid plus the two
// emitter-cavity states, wavepacket time propagation, and per-momentum
// transmission extraction.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <iosfwd>
#include <vector>

#include "router/mode_transform.hpp"
#include "router/model.hpp"

namespace router {

/// Discretization and propagation parameters for one verification job. All
/// momenta live in the rotating frame where the mode energy equals Delta_k^n.
struct OracleConfig {
    int n_modes = 2048;
    double k_min = -10.0;
    double k_max = 10.0;
    double sigma_k = 0.05;   // wavepacket momentum spread
    double carrier = 0.0;    // carrier Delta_k^n
    double x0 = -60.0;       // initial wavepacket center, left of the emitter
    double t_final = 220.0;

    double dk() const { return (k_max - k_min) / (n_modes - 1); }

    /// Mode spacing across the populated (packet) region: the core spacing of
    /// the graded grid, or dk() when the grid is uniform.
    double packet_resolution() const;

    /// Enforces the resolution contracts; throws ValidationError on violation.
    void validate() const;

    /// Default window +-400 gamma around the carrier with sigma_k = 0.05 gamma;
    /// the wide graded window keeps the band-truncation self-energy negligible.
    static OracleConfig for_carrier(double carrier, double gamma = 1.0);
};

/// Discretized momentum grid with quadrature weights. Narrow windows give a
/// uniform grid. Wide windows (both sides beyond 32 sigma_k) use a graded grid:
/// a fine uniform core over carrier +- 16 sigma_k holding ~3/4 of the modes
/// (odd count, so the carrier is a grid point) plus geometrically spaced tails
/// out to the window edges. Truncating the band at +-W shifts the effective
/// mode energies by ~ (gamma/pi)(k - carrier)/W (the principal-value tail of
/// the self-energy), so the tails push W far out at negligible mode cost while
/// the core keeps the packet and the radiated spectrum finely resolved. Each
/// mode carries the quadrature weight w_j (half-distance between neighbors);
/// its emitter coupling is g_j = sqrt(gamma w_j / 2 pi).
struct MomentumGrid {
    std::vector<double> k;       // mode energies, ascending
    std::vector<double> weight;  // quadrature cell widths
};

MomentumGrid momentum_grid(const OracleConfig& config);

/// State in the exact single-excitation subspace: one complex amplitude per
/// momentum mode plus the |2,n> and |3,n-1> amplitudes at the end.
struct SingleExcitationState {
    Eigen::VectorXcd amplitudes;  // size n_modes + 2

    Complex& beta() { return amplitudes(amplitudes.size() - 2); }
    Complex& zeta() { return amplitudes(amplitudes.size() - 1); }
    Complex beta() const { return amplitudes(amplitudes.size() - 2); }
    Complex zeta() const { return amplitudes(amplitudes.size() - 1); }

    double norm() const { return amplitudes.norm(); }
    double emitter_population() const { return std::norm(beta()) + std::norm(zeta()); }
};

/// Dense real-symmetric single-excitation Hamiltonian over momentum_grid(config):
/// modes on the diagonal at their Delta_k energies, |2,n> at 0, |3,n-1> at
/// -Delta_a, mode<->|2,n> coupling g_j = sqrt(gamma w_j / 2 pi) and
/// |2,n> <-> |3,n-1> coupling sqrt(n) lambda.
Eigen::MatrixXd build_hamiltonian(const OracleConfig& config, const CavityParams& cavity,
                                  double delta_a, double gamma);

/// Normalized Gaussian wavepacket centered at config.carrier in momentum and at
/// config.x0 in position, moving right.
SingleExcitationState initial_wavepacket(const OracleConfig& config);

/// Spectral propagator: one eigendecomposition, then exact evolution to any t.
class Propagator {
public:
    explicit Propagator(const Eigen::MatrixXd& hamiltonian);

    SingleExcitationState evolve(const SingleExcitationState& initial, double t) const;

private:
    Eigen::MatrixXd eigenvectors_;
    Eigen::VectorXd eigenvalues_;
};

/// Evolves to t_final via the spectral propagator; enforces the < 1e-8 norm
/// drift contract (hard failure on violation).
SingleExcitationState propagate(const Eigen::MatrixXd& hamiltonian,
                                const SingleExcitationState& initial, double t_final);

/// Independent cross-check path: fixed-step RK4 on the same Hamiltonian.
SingleExcitationState propagate_rk4(const Eigen::MatrixXd& hamiltonian,
                                    const SingleExcitationState& initial, double t_final,
                                    double dt);

struct TransmissionSample {
    double k = 0.0;
    Complex t_estimate;
};

/// Per-momentum transmission from the free-evolution-compensated amplitude ratio,
/// restricted to modes holding at least 1e-4 of the peak initial population.
/// Requires the emitter to be empty (< 1e-6) at t_final.
std::vector<TransmissionSample> extract_transmission(const OracleConfig& config,
                                                     const SingleExcitationState& initial,
                                                     const SingleExcitationState& final_state,
                                                     double t_final);

struct VerifyRow {
    double k = 0.0;
    Complex t_estimate;
    Complex t_closed;
    double abs_error = 0.0;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    double max_abs_error = 0.0;
    double final_norm_drift = 0.0;
    double final_emitter_population = 0.0;

    void write_csv(std::ostream& out) const;
};

/// Full verification job: build, propagate, extract, compare against the
/// closed-form t_{k,e}.
VerifyReport verify_against_closed_form(const OracleConfig& config, const CavityParams& cavity,
                                        double delta_a, double gamma);

/// Spontaneous-decay calibration: starts in |2,n> with lambda = 0 and returns
/// (t, |beta(t)|^2) samples; fixes the g(dk) normalization against exp(-gamma t).
std::vector<std::pair<double, double>> decay_calibration(const OracleConfig& config,
                                                         double gamma, int samples,
                                                         double t_max);

/// Peak emitter population during a scattering run, sampled uniformly in time.
double peak_emitter_population(const Eigen::MatrixXd& hamiltonian,
                               const SingleExcitationState& initial, double t_final,
                               int samples);

}  // namespace router
