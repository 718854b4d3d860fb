// mode_transform.hpp — parity-mode change of basis over the four chiral channels
// and reconstruction of the four-port out-state from the even-mode scattering factor.

#pragma once

#include <array>
#include <complex>
#include <iosfwd>

#include "router/model.hpp"

namespace router {

using Complex = std::complex<double>;

/// Coefficients of a single-photon state over the channel basis R_a(x), L_a(-x),
/// R_b(x), L_b(-x).
struct ChannelVector {
    std::array<Complex, 4> amplitudes{};

    double squared_norm() const;
};

/// 4x4 orthogonal matrix whose rows expand the E, O, O_a, O_b modes over the
/// channel basis. Each row is normalized to unit Euclidean norm; only the E row
/// (whose direction is unambiguous) enters any scattering quantity.
struct ParityBasis {
    // Row order: E, O, O_a, O_b. Column order follows channel_index().
    std::array<std::array<double, 4>, 4> rows{};

    const std::array<double, 4>& even_row() const { return rows[0]; }

    /// max |M^T M - I| entry, for unitarity checks.
    double orthogonality_defect() const;

    void write_csv(std::ostream& out) const;
};

/// Builds the parity basis. Requires gamma_a > 0 and gamma_b > 0; otherwise the
/// O mode degenerates and the reduced single-waveguide treatment applies.
ParityBasis build_parity_basis(const CouplingMatrix& couplings);

/// Components of an incident channel state along the even mode and the three
/// scatter-free odd modes. Squared components sum to one.
struct InputDecomposition {
    double even_amplitude = 0.0;  // cos(alpha)
    std::array<double, 3> odd_amplitudes{};

    double squared_norm() const;
};

InputDecomposition decompose_input(PortLabel input, const CouplingMatrix& couplings);

/// Four-port scattering amplitudes for one incident channel. Probabilities are
/// always derived from the amplitudes at the call site, never cached.
struct FourPortResult {
    Complex t_same;   // transmission into the input channel's own waveguide/direction
    Complex r_same;   // reflection within the input waveguide
    Complex t_other;  // transmission into the other waveguide
    Complex r_other;  // reflection into the other waveguide

    double transmission() const { return std::norm(t_same); }
    double reflection() const { return std::norm(r_same); }
    double transmission_other() const { return std::norm(t_other); }
    double reflection_other() const { return std::norm(r_other); }

    /// Transfer coefficient: probability of exiting from the waveguide the photon
    /// did not enter.
    double transfer() const { return transmission_other() + reflection_other(); }

    double probability_sum() const {
        return transmission() + reflection() + transmission_other() + reflection_other();
    }
};

/// Maps the even-mode scattering factor U_k onto the four chiral channels:
///   t^p = (gamma_pg/gamma) U + 1,          r^p  = sqrt(gamma_pg gamma_pgbar)/gamma U,
///   t^pbar = sqrt(gamma_pg gamma_pbarg)/gamma U,  r^pbar = sqrt(gamma_pg gamma_pbargbar)/gamma U.
FourPortResult reconstruct_four_port(Complex u_k, PortLabel input,
                                     const CouplingMatrix& couplings);

}  // namespace router
