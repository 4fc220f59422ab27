#include <benchmark/benchmark.h>

#include "bellpulse/density_matrix.hpp"
#include "bellpulse/fock_oracle.hpp"
#include "bellpulse/measures.hpp"
#include "bellpulse/pulse_dynamics.hpp"
#include "bellpulse/reservoir.hpp"
#include "bellpulse/scan.hpp"

using namespace bellpulse;

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

void bm_concurrence(benchmark::State& state) {
    const auto rho = DensityMatrix::werner(0.7);
    for (auto _ : state)
        benchmark::DoNotOptimize(concurrence(rho));
}
BENCHMARK(bm_concurrence);

void bm_concurrence_via_r(benchmark::State& state) {
    const auto rho = DensityMatrix::werner(0.7);
    for (auto _ : state)
        benchmark::DoNotOptimize(concurrence_via_R(rho));
}
BENCHMARK(bm_concurrence_via_r);

void bm_discretize(benchmark::State& state) {
    const CouplingFunction cf{};
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(discretize(cf, k, 6.0).total_strength());
}
BENCHMARK(bm_discretize)->Arg(100)->Arg(1000)->Arg(2000);

void bm_decoherence_exponent(benchmark::State& state) {
    const auto modes = discretize(CouplingFunction{}, static_cast<int>(state.range(0)), 6.0);
    const auto sched = PulseSchedule::uniform(10, 2.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(decoherence_exponent(modes, 17.3, sched));
}
BENCHMARK(bm_decoherence_exponent)->Arg(100)->Arg(1000)->Arg(2000);

void bm_metric_scan_point(benchmark::State& state) {
    const auto modes = discretize(CouplingFunction{}, 500, 6.0);
    ScanSpec spec;
    spec.tau_lo = 0.5;
    spec.tau_hi = 8.0;
    spec.metric = Metric::TimeAveragedC;
    spec.horizon = 30.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(evaluate_metric(modes, spec, kTwoPi));
}
BENCHMARK(bm_metric_scan_point);

void bm_oracle_evolve(benchmark::State& state) {
    OracleConfig oc;
    oc.modes = single_mode(1.0, 0.0338513750128654);
    oc.fock_dim = static_cast<int>(state.range(0));
    oc.schedule = PulseSchedule::uniform(1, kTwoPi);
    oc.t_grid = {0.0, kTwoPi, 2.0 * kTwoPi};
    for (auto _ : state)
        benchmark::DoNotOptimize(evolve(oc).samples.back().concurrence);
}
BENCHMARK(bm_oracle_evolve)->Arg(16)->Arg(40)->Arg(64);

} // namespace

BENCHMARK_MAIN();
