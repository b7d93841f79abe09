#include <benchmark/benchmark.h>

#include "opinion/balance.hpp"
#include "opinion/dynamics.hpp"
#include "opinion/netgen.hpp"
#include "opinion/rational.hpp"

namespace {

opinion::OpinionExchangeNetwork sized_exchange(int n) {
    auto gen = opinion::random_network(n, 2, 42);
    return opinion::build_opinion_exchange(gen.net, gen.groups, {1.0, -1.0});
}

void BM_SteadyStateDirect(benchmark::State& state) {
    opinion::OpinionExchangeNetwork x = sized_exchange(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        opinion::SteadyStateResult r = opinion::steady_state_direct(x, 1.0);
        benchmark::DoNotOptimize(r.mu);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SteadyStateDirect)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void BM_Simulate(benchmark::State& state) {
    opinion::OpinionExchangeNetwork x = sized_exchange(static_cast<int>(state.range(0)));
    opinion::Vector mu0 = opinion::Vector::Zero(x.size());
    for (auto _ : state) {
        opinion::SimulationResult run = opinion::simulate(x, mu0, 1.0, 5000, 1e-12);
        benchmark::DoNotOptimize(run.trajectory.back());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Simulate)->RangeMultiplier(4)->Range(8, 128)->Complexity();

void BM_SpectralRadius(benchmark::State& state) {
    opinion::OpinionExchangeNetwork x = sized_exchange(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(opinion::spectral_radius(x.weights()));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SpectralRadius)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void BM_BalanceCheck(benchmark::State& state) {
    opinion::OpinionExchangeNetwork x = sized_exchange(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        opinion::BalanceReport report = opinion::check_structural_balance(x);
        benchmark::DoNotOptimize(report.strongly_balanced);
    }
}
BENCHMARK(BM_BalanceCheck)->RangeMultiplier(4)->Range(8, 512);

void BM_ExactSteadyState(benchmark::State& state) {
    opinion::exact::Problem p =
        opinion::exact::complete_network({static_cast<int>(state.range(0)) / 2,
                                          static_cast<int>(state.range(0)) / 2});
    opinion::exact::Exchange x = opinion::exact::build_exchange(p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            opinion::exact::steady_state(x, opinion::exact::Rational(1)));
    }
}
BENCHMARK(BM_ExactSteadyState)->DenseRange(8, 32, 8);

}  // namespace

BENCHMARK_MAIN();
