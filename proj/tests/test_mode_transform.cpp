// test_mode_transform.cpp — parity basis, input decomposition, four-port map.

#include <doctest.h>

#include <cmath>
#include <random>

#include "router/mode_transform.hpp"

using namespace router;

namespace {

const CouplingMatrix kRoutingSet{0.5, 0.3, 0.1, 0.1};
const PortLabel kRa{Waveguide::A, Direction::Right};

CouplingMatrix random_couplings(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> rate(1e-4, 1.0);
    return CouplingMatrix{rate(rng), rate(rng), rate(rng), rate(rng)};
}

}  // namespace

TEST_CASE("even row for equal couplings is (1/2, 1/2, 1/2, 1/2)") {
    const ParityBasis basis = build_parity_basis(CouplingMatrix{0.25, 0.25, 0.25, 0.25});
    for (double entry : basis.even_row()) CHECK(entry == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("even row for the routing set") {
    const ParityBasis basis = build_parity_basis(kRoutingSet);
    CHECK(basis.even_row()[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(basis.even_row()[1] == doctest::Approx(std::sqrt(0.3)).epsilon(1e-14));
    CHECK(basis.even_row()[2] == doctest::Approx(std::sqrt(0.1)).epsilon(1e-14));
    CHECK(basis.even_row()[3] == doctest::Approx(std::sqrt(0.1)).epsilon(1e-14));
}

TEST_CASE("basis is orthogonal for 1000 random coupling draws") {
    std::mt19937_64 rng(7);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i)
        worst = std::max(worst, build_parity_basis(random_couplings(rng)).orthogonality_defect());
    CHECK(worst < 1e-12);
}

TEST_CASE("single-waveguide couplings degenerate the basis") {
    CHECK_THROWS_AS(build_parity_basis(CouplingMatrix{0.5, 0.5, 0.0, 0.0}), ValidationError);
}

TEST_CASE("input decomposition: even amplitude and unit norm") {
    const InputDecomposition routing = decompose_input(kRa, kRoutingSet);
    CHECK(routing.even_amplitude == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(routing.squared_norm() == doctest::Approx(1.0).epsilon(1e-14));

    const InputDecomposition symmetric =
        decompose_input(kRa, CouplingMatrix{0.25, 0.25, 0.25, 0.25});
    CHECK(symmetric.even_amplitude == doctest::Approx(0.5).epsilon(1e-14));

    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
        const CouplingMatrix c = random_couplings(rng);
        for (PortLabel port : all_ports())
            CHECK(decompose_input(port, c).squared_norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("U = 0 gives identity scattering") {
    const FourPortResult r = reconstruct_four_port(Complex(0.0, 0.0), kRa, kRoutingSet);
    CHECK(r.t_same == Complex(1.0, 0.0));
    CHECK(r.transmission() == 1.0);
    CHECK(r.reflection() == 0.0);
    CHECK(r.transfer() == 0.0);
}

TEST_CASE("U = -2 with the routing set reaches R_p = 0.6, T = 0.4") {
    const FourPortResult r = reconstruct_four_port(Complex(-2.0, 0.0), kRa, kRoutingSet);
    CHECK(r.transmission() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(r.reflection() == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(r.transfer() == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("probability sum follows 1 + (g_pg/g)(2 Re U + |U|^2)") {
    // Independent bookkeeping of the sum for a U off the unitarity circle.
    const Complex u(-1.0, 0.0);
    const FourPortResult r = reconstruct_four_port(u, kRa, kRoutingSet);
    const double expected = 1.0 + 0.5 * (2.0 * u.real() + std::norm(u));
    CHECK(r.probability_sum() == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("flux is conserved for every U on the circle |1 + U| = 1") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
    for (int i = 0; i < 500; ++i) {
        const double phi = angle(rng);
        const Complex u = Complex(std::cos(phi) - 1.0, std::sin(phi));
        const CouplingMatrix c = random_couplings(rng);
        for (PortLabel port : all_ports()) {
            const FourPortResult r = reconstruct_four_port(u, port, c);
            CHECK(std::abs(r.probability_sum() - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("swapping chirality and input direction leaves probabilities unchanged") {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
    for (int i = 0; i < 200; ++i) {
        const CouplingMatrix c = random_couplings(rng);
        const CouplingMatrix mirrored{c.gamma_al, c.gamma_ar, c.gamma_bl, c.gamma_br};
        const double phi = angle(rng);
        const Complex u = Complex(std::cos(phi) - 1.0, std::sin(phi));
        for (PortLabel port : all_ports()) {
            const FourPortResult a = reconstruct_four_port(u, port, c);
            const FourPortResult b = reconstruct_four_port(u, other_direction(port), mirrored);
            CHECK(a.transmission() == doctest::Approx(b.transmission()).epsilon(1e-12));
            CHECK(a.reflection() == doctest::Approx(b.reflection()).epsilon(1e-12));
            CHECK(a.transmission_other() == doctest::Approx(b.transmission_other()).epsilon(1e-12));
            CHECK(a.reflection_other() == doctest::Approx(b.reflection_other()).epsilon(1e-12));
        }
    }
}
