// oracle.cpp — discretized single-excitation dynamics and closed-form comparison.

#include "router/oracle.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "router/scattering.hpp"

#ifdef ROUTER_HAVE_LAPACKE
#include <lapacke.h>
#endif

namespace router {

namespace {

bool use_graded_grid(const OracleConfig& config) {
    const double core_half = 16.0 * config.sigma_k;
    return config.n_modes >= 256 && config.carrier - config.k_min >= 2.0 * core_half &&
           config.k_max - config.carrier >= 2.0 * core_half;
}

int graded_core_count(int n_modes) {
    int n_core = 3 * n_modes / 4;
    if (n_core % 2 == 0) --n_core;  // odd, so the carrier is a grid point
    return n_core;
}

}  // namespace

double OracleConfig::packet_resolution() const {
    if (!use_graded_grid(*this)) return dk();
    return 32.0 * sigma_k / (graded_core_count(n_modes) - 1);
}

void OracleConfig::validate() const {
    if (n_modes < 64)
        throw ValidationError("under-resolved grid", "n_modes must be >= 64");
    if (!(k_max > k_min))
        throw ValidationError("empty momentum window", "k_max must exceed k_min");
    if (!(sigma_k >= 5.0 * packet_resolution()))
        throw ValidationError("under-resolved wavepacket",
                              "sigma_k must be >= 5 * the packet-region mode spacing");
    if (!(carrier - k_min >= 8.0 * sigma_k) || !(k_max - carrier >= 8.0 * sigma_k))
        throw ValidationError("window too narrow",
                              "momentum window must span >= 8 sigma_k on each side of "
                              "the carrier");
    if (!(t_final > 0.0))
        throw ValidationError("non-positive propagation time", "t_final must be > 0");
}

OracleConfig OracleConfig::for_carrier(double carrier, double gamma) {
    OracleConfig cfg;
    cfg.carrier = carrier;
    cfg.k_min = carrier - 400.0 * gamma;
    cfg.k_max = carrier + 400.0 * gamma;
    cfg.sigma_k = 0.05 * gamma;
    cfg.x0 = -3.0 / cfg.sigma_k;
    cfg.t_final = 2.0 * std::abs(cfg.x0) + 100.0 / gamma;
    return cfg;
}

static MomentumGrid momentumgrid_unchecked(const OracleConfig& config) {
    MomentumGrid grid;
    grid.k.reserve(config.n_modes);

    if (!use_graded_grid(config)) {
        const double dk = config.dk();
        for (int i = 0; i < config.n_modes; ++i) grid.k.push_back(config.k_min + i * dk);
    } else {
        const double core_half = 16.0 * config.sigma_k;
        const int n_core = graded_core_count(config.n_modes);
        const int n_left = (config.n_modes - n_core) / 2;
        const int n_right = config.n_modes - n_core - n_left;

        // Left tail: distances from the carrier shrink geometrically from the
        // window edge down to just outside the core.
        const double span_left = config.carrier - config.k_min;
        for (int j = 0; j < n_left; ++j) {
            const double d =
                span_left * std::pow(core_half / span_left, static_cast<double>(j) / n_left);
            grid.k.push_back(config.carrier - d);
        }

        // Indexed from the center so the carrier is exactly on the grid.
        const double core_dk = 2.0 * core_half / (n_core - 1);
        const int half = (n_core - 1) / 2;
        for (int i = 0; i < n_core; ++i)
            grid.k.push_back(config.carrier + (i - half) * core_dk);

        const double span_right = config.k_max - config.carrier;
        for (int j = 1; j <= n_right; ++j) {
            const double d =
                core_half * std::pow(span_right / core_half, static_cast<double>(j) / n_right);
            grid.k.push_back(config.carrier + d);
        }
    }

    const std::size_t n = grid.k.size();
    grid.weight.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = i == 0 ? grid.k[0] : (grid.k[i - 1] + grid.k[i]) / 2.0;
        const double hi = i + 1 == n ? grid.k[n - 1] : (grid.k[i] + grid.k[i + 1]) / 2.0;
        grid.weight[i] = hi - lo;
    }
    return grid;
}

MomentumGrid momentum_grid(const OracleConfig& config) {
    config.validate();
    return momentumgrid_unchecked(config);
}

Eigen::MatrixXd build_hamiltonian(const OracleConfig& config, const CavityParams& cavity,
                                  double delta_a, double gamma) {
    config.validate();
    if (!(gamma > 0.0))
        throw ValidationError("zero total coupling", "build_hamiltonian requires gamma > 0");

    const MomentumGrid grid = momentumgrid_unchecked(config);
    const int n = config.n_modes;
    const double pump = std::sqrt(static_cast<double>(cavity.n)) * cavity.lambda;

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n + 2, n + 2);
    for (int i = 0; i < n; ++i) {
        h(i, i) = grid.k[i];
        const double g = std::sqrt(gamma * grid.weight[i] / (2.0 * std::numbers::pi));
        h(i, n) = g;
        h(n, i) = g;
    }
    h(n, n) = 0.0;
    h(n + 1, n + 1) = -delta_a;
    h(n, n + 1) = pump;
    h(n + 1, n) = pump;
    return h;
}

SingleExcitationState initial_wavepacket(const OracleConfig& config) {
    const MomentumGrid grid = momentum_grid(config);
    const int n = config.n_modes;

    SingleExcitationState state;
    state.amplitudes = Eigen::VectorXcd::Zero(n + 2);
    for (int i = 0; i < n; ++i) {
        const double detune = grid.k[i] - config.carrier;
        const double envelope = std::exp(-detune * detune / (4.0 * config.sigma_k * config.sigma_k));
        state.amplitudes(i) = envelope * std::exp(Complex(0.0, -grid.k[i] * config.x0));
    }
    state.amplitudes /= state.amplitudes.norm();
    return state;
}

Propagator::Propagator(const Eigen::MatrixXd& hamiltonian) {
    if (hamiltonian.rows() != hamiltonian.cols())
        throw std::invalid_argument("Propagator: matrix must be square");
    const double asym = (hamiltonian - hamiltonian.transpose()).cwiseAbs().maxCoeff();
    if (asym != 0.0)
        throw std::invalid_argument("Propagator: matrix must be symmetric");

#ifdef ROUTER_HAVE_LAPACKE
    const int n = static_cast<int>(hamiltonian.rows());
    eigenvectors_ = hamiltonian;
    eigenvalues_.resize(n);
    // Eigen matrices are column-major; dsyevd then returns eigenvectors as columns.
    int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, eigenvectors_.data(), n,
                              eigenvalues_.data());
    if (info != 0)
        throw std::runtime_error("Propagator: dsyevd failed with info=" + std::to_string(info));
#else
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("Propagator: eigendecomposition failed");
    eigenvectors_ = solver.eigenvectors();
    eigenvalues_ = solver.eigenvalues();
#endif
}

SingleExcitationState Propagator::evolve(const SingleExcitationState& initial, double t) const {
    Eigen::VectorXcd spectral = eigenvectors_.transpose() * initial.amplitudes;
    for (Eigen::Index i = 0; i < spectral.size(); ++i)
        spectral(i) *= std::exp(Complex(0.0, -eigenvalues_(i) * t));

    SingleExcitationState out;
    out.amplitudes = eigenvectors_ * spectral;
    return out;
}

SingleExcitationState propagate(const Eigen::MatrixXd& hamiltonian,
                                const SingleExcitationState& initial, double t_final) {
    Propagator prop(hamiltonian);
    SingleExcitationState out = prop.evolve(initial, t_final);
    const double drift = std::abs(out.norm() - initial.norm());
    if (!(drift < 1e-8))
        throw std::runtime_error("propagate: norm drift " + std::to_string(drift) +
                                 " exceeds the 1e-8 contract");
    return out;
}

SingleExcitationState propagate_rk4(const Eigen::MatrixXd& hamiltonian,
                                    const SingleExcitationState& initial, double t_final,
                                    double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("propagate_rk4: dt must be > 0");

    const Complex minus_i(0.0, -1.0);
    auto rhs = [&](const Eigen::VectorXcd& psi) -> Eigen::VectorXcd {
        return minus_i * (hamiltonian * psi);
    };

    SingleExcitationState state = initial;
    const long steps = static_cast<long>(std::ceil(t_final / dt));
    const double h = t_final / steps;
    for (long s = 0; s < steps; ++s) {
        const Eigen::VectorXcd k1 = rhs(state.amplitudes);
        const Eigen::VectorXcd k2 = rhs(state.amplitudes + 0.5 * h * k1);
        const Eigen::VectorXcd k3 = rhs(state.amplitudes + 0.5 * h * k2);
        const Eigen::VectorXcd k4 = rhs(state.amplitudes + h * k3);
        state.amplitudes += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return state;
}

std::vector<TransmissionSample> extract_transmission(const OracleConfig& config,
                                                     const SingleExcitationState& initial,
                                                     const SingleExcitationState& final_state,
                                                     double t_final) {
    if (!(final_state.emitter_population() < 1e-6))
        throw std::runtime_error("extract_transmission: propagation too short, emitter "
                                 "population still " +
                                 std::to_string(final_state.emitter_population()));

    const MomentumGrid grid = momentum_grid(config);
    const int n = config.n_modes;

    double peak = 0.0;
    for (int i = 0; i < n; ++i) peak = std::max(peak, std::norm(initial.amplitudes(i)));

    std::vector<TransmissionSample> samples;
    for (int i = 0; i < n; ++i) {
        if (std::norm(initial.amplitudes(i)) < 1e-4 * peak) continue;
        const double k = grid.k[i];
        const Complex free_phase = std::exp(Complex(0.0, k * t_final));
        samples.push_back({k, final_state.amplitudes(i) * free_phase / initial.amplitudes(i)});
    }
    return samples;
}

void VerifyReport::write_csv(std::ostream& out) const {
    out << "k,re_t_est,im_t_est,re_t_closed,im_t_closed,abs_error\n";
    char buf[160];
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n", row.k,
                      row.t_estimate.real(), row.t_estimate.imag(), row.t_closed.real(),
                      row.t_closed.imag(), row.abs_error);
        out << buf;
    }
}

VerifyReport verify_against_closed_form(const OracleConfig& config, const CavityParams& cavity,
                                        double delta_a, double gamma) {
    const Eigen::MatrixXd h = build_hamiltonian(config, cavity, delta_a, gamma);
    const SingleExcitationState initial = initial_wavepacket(config);
    const SingleExcitationState final_state = propagate(h, initial, config.t_final);

    VerifyReport report;
    report.final_norm_drift = std::abs(final_state.norm() - initial.norm());
    report.final_emitter_population = final_state.emitter_population();

    for (const auto& sample : extract_transmission(config, initial, final_state, config.t_final)) {
        const ScatterPoint point = ScatterPoint::from_detunings(sample.k, delta_a);
        const Complex closed = even_transmission(point, cavity, gamma);
        const double err = std::abs(sample.t_estimate - closed);
        report.rows.push_back({sample.k, sample.t_estimate, closed, err});
        report.max_abs_error = std::max(report.max_abs_error, err);
    }
    return report;
}

std::vector<std::pair<double, double>> decay_calibration(const OracleConfig& config,
                                                         double gamma, int samples,
                                                         double t_max) {
    CavityParams cavity{0.0, 0.0, 0};
    const Eigen::MatrixXd h = build_hamiltonian(config, cavity, 0.0, gamma);

    SingleExcitationState state;
    state.amplitudes = Eigen::VectorXcd::Zero(config.n_modes + 2);
    state.beta() = 1.0;

    Propagator prop(h);
    std::vector<std::pair<double, double>> populations;
    populations.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        const double t = t_max * (i + 1) / samples;
        populations.emplace_back(t, std::norm(prop.evolve(state, t).beta()));
    }
    return populations;
}

double peak_emitter_population(const Eigen::MatrixXd& hamiltonian,
                               const SingleExcitationState& initial, double t_final,
                               int samples) {
    Propagator prop(hamiltonian);
    double peak = 0.0;
    for (int i = 1; i <= samples; ++i) {
        const double t = t_final * i / samples;
        peak = std::max(peak, prop.evolve(initial, t).emitter_population());
    }
    return peak;
}

}  // namespace router
