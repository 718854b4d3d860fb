// bench_router.cpp — microbenchmarks for the hot paths: the closed-form
// pointwise evaluation, sweep generation, and the brute-force propagator.

#include <benchmark/benchmark.h>

#include "router/oracle.hpp"
#include "router/scattering.hpp"
#include "router/sweep.hpp"

using namespace router;

namespace {

const CouplingMatrix kRoutingSet{0.5, 0.3, 0.1, 0.1};
const PortLabel kInput{Waveguide::A, Direction::Right};

void bm_scattering_factor(benchmark::State& state) {
    const CavityParams cavity{0.0, 1.0, 1};
    double dk = -3.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            scattering_factor(ScatterPoint::from_detunings(dk, 1.5), cavity, 1.0));
        dk += 1e-6;
    }
}
BENCHMARK(bm_scattering_factor);

void bm_four_port(benchmark::State& state) {
    const CavityParams cavity{0.0, 1.0, 1};
    double dk = -3.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            four_port(ScatterPoint::from_detunings(dk, 1.5), cavity, kRoutingSet, kInput));
        dk += 1e-6;
    }
}
BENCHMARK(bm_four_port);

void bm_spectrum_1d(benchmark::State& state) {
    const ValidatedSystem sys = validate_system(kRoutingSet, 1.0, 1, 1.5);
    const Axis axis{"Delta_k_n", -6.0, 6.0, static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(spectrum_1d(axis, sys, kInput));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_spectrum_1d)->Arg(401)->Arg(4001);

void bm_map_2d(benchmark::State& state) {
    const ValidatedSystem sys = validate_system(kRoutingSet, 1.0, 1, 0.0);
    const int n = static_cast<int>(state.range(0));
    const Axis dk{"Delta_k_n", -6.0, 6.0, n};
    const Axis da{"Delta_a", -6.0, 6.0, n};
    for (auto _ : state) benchmark::DoNotOptimize(map_2d(dk, da, sys, kInput));
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(bm_map_2d)->Arg(101)->Arg(301);

void bm_propagator_build(benchmark::State& state) {
    OracleConfig cfg = OracleConfig::for_carrier(0.0, 1.0);
    cfg.n_modes = static_cast<int>(state.range(0));
    const Eigen::MatrixXd h = build_hamiltonian(cfg, CavityParams{0.0, 1.0, 1}, 1.5, 1.0);
    for (auto _ : state) {
        Propagator propagator(h);
        benchmark::DoNotOptimize(propagator);
    }
}
BENCHMARK(bm_propagator_build)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void bm_oracle_verify(benchmark::State& state) {
    OracleConfig cfg = OracleConfig::for_carrier(0.0, 1.0);
    cfg.n_modes = static_cast<int>(state.range(0));
    const CavityParams cavity{0.0, 1.0, 1};
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_against_closed_form(cfg, cavity, 1.5, 1.0));
}
BENCHMARK(bm_oracle_verify)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
