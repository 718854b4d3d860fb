// mode_transform.cpp — parity basis construction and four-port reconstruction.

#include "router/mode_transform.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace router {

double ChannelVector::squared_norm() const {
    double sum = 0.0;
    for (const auto& a : amplitudes) sum += std::norm(a);
    return sum;
}

double ParityBasis::orthogonality_defect() const {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double dot = 0.0;
            for (int k = 0; k < 4; ++k) dot += rows[k][i] * rows[k][j];
            worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

void ParityBasis::write_csv(std::ostream& out) const {
    out << "mode,R_a,L_a,R_b,L_b\n";
    static const char* names[4] = {"E", "O", "O_a", "O_b"};
    char buf[64];
    for (int i = 0; i < 4; ++i) {
        out << names[i];
        for (int j = 0; j < 4; ++j) {
            std::snprintf(buf, sizeof(buf), ",%.17g", rows[i][j]);
            out << buf;
        }
        out << '\n';
    }
}

ParityBasis build_parity_basis(const CouplingMatrix& couplings) {
    const double ga = couplings.gamma_a();
    const double gb = couplings.gamma_b();
    const double g = couplings.gamma();
    if (!(ga > 0.0) || !(gb > 0.0))
        throw ValidationError("degenerate parity basis",
                              "gamma_a and gamma_b must both be > 0; a single-waveguide "
                              "system needs the reduced two-mode treatment instead");

    const double sar = std::sqrt(couplings.gamma_ar / g);
    const double sal = std::sqrt(couplings.gamma_al / g);
    const double sbr = std::sqrt(couplings.gamma_br / g);
    const double sbl = std::sqrt(couplings.gamma_bl / g);

    ParityBasis basis;
    basis.rows[0] = {sar, sal, sbr, sbl};

    const double wa = std::sqrt(gb / ga);
    const double wb = std::sqrt(ga / gb);
    basis.rows[1] = {wa * sar, wa * sal, -wb * sbr, -wb * sbl};

    basis.rows[2] = {std::sqrt(couplings.gamma_al / ga), -std::sqrt(couplings.gamma_ar / ga),
                     0.0, 0.0};
    basis.rows[3] = {0.0, 0.0, std::sqrt(couplings.gamma_bl / gb),
                     -std::sqrt(couplings.gamma_br / gb)};

    // Rows are unit-norm analytically; renormalize anyway so the orthogonality
    // contract holds for extreme rate ratios.
    for (auto& row : basis.rows) {
        double norm = std::sqrt(row[0] * row[0] + row[1] * row[1] + row[2] * row[2] +
                                row[3] * row[3]);
        for (double& x : row) x /= norm;
    }
    return basis;
}

double InputDecomposition::squared_norm() const {
    double sum = even_amplitude * even_amplitude;
    for (double x : odd_amplitudes) sum += x * x;
    return sum;
}

InputDecomposition decompose_input(PortLabel input, const CouplingMatrix& couplings) {
    ParityBasis basis = build_parity_basis(couplings);
    const int col = channel_index(input);

    InputDecomposition dec;
    dec.even_amplitude = basis.rows[0][col];
    dec.odd_amplitudes = {basis.rows[1][col], basis.rows[2][col], basis.rows[3][col]};
    return dec;
}

FourPortResult reconstruct_four_port(Complex u_k, PortLabel input,
                                     const CouplingMatrix& couplings) {
    const double g = couplings.gamma();
    const double g_in = couplings.rate(input);
    const double g_flip = couplings.rate(other_direction(input));
    const double g_cross = couplings.rate(other_waveguide(input));
    const double g_diag = couplings.rate(other_direction(other_waveguide(input)));

    FourPortResult out;
    out.t_same = (g_in / g) * u_k + 1.0;
    out.r_same = (std::sqrt(g_in * g_flip) / g) * u_k;
    out.t_other = (std::sqrt(g_in * g_cross) / g) * u_k;
    out.r_other = (std::sqrt(g_in * g_diag) / g) * u_k;
    return out;
}

}  // namespace router
