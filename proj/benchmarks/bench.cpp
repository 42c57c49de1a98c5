#include <benchmark/benchmark.h>

#include <secretary/asymptotic.hpp>
#include <secretary/dp.hpp>
#include <secretary/exactprob.hpp>
#include <secretary/optimize.hpp>
#include <secretary/simulate.hpp>

using namespace secretary;

static void BM_slp_win_prob(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ProblemInstance inst{n, 5};
    const SingleLevelPolicy policy{n / 2, 3};
    for (auto _ : state) benchmark::DoNotOptimize(exactprob::slp_win_prob(inst, policy));
}
BENCHMARK(BM_slp_win_prob)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_dlp_win_prob(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ProblemInstance inst{n, 5};
    const DoubleLevelPolicy policy{n / 3, (2 * n) / 3, 1, 4};
    for (auto _ : state) benchmark::DoNotOptimize(exactprob::dlp_win_prob(inst, policy));
}
BENCHMARK(BM_dlp_win_prob)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_slp_win_prob_exact(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ProblemInstance inst{n, 5};
    const SingleLevelPolicy policy{n / 2, 3};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            exactprob::slp_win_prob(inst, policy, NumericMode::exact_rational));
}
BENCHMARK(BM_slp_win_prob_exact)->Arg(50)->Arg(100)->Arg(200);

static void BM_optimal_policy_dp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ProblemInstance inst{n, 10};
    for (auto _ : state) benchmark::DoNotOptimize(dp::optimal_policy_dp(inst));
}
BENCHMARK(BM_optimal_policy_dp)->Arg(100)->Arg(1000)->Arg(2000);

static void BM_slp_optimum(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ProblemInstance inst{n, 10};
    for (auto _ : state) benchmark::DoNotOptimize(optimize::slp_optimum(inst));
}
BENCHMARK(BM_slp_optimum)->Arg(250)->Arg(1000);

static void BM_dlp_optimum(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ProblemInstance inst{n, 10};
    for (auto _ : state) benchmark::DoNotOptimize(optimize::dlp_optimum(inst));
}
BENCHMARK(BM_dlp_optimum)->Arg(250)->Arg(1000);

static void BM_slp_asymptotic_optimum(benchmark::State& state) {
    const int b = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(asymptotic::slp_asymptotic_optimum(b));
}
BENCHMARK(BM_slp_asymptotic_optimum)->Arg(5)->Arg(10);

static void BM_monte_carlo(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ProblemInstance inst{n, 5};
    const Policy policy = SingleLevelPolicy{n / 2, 3};
    const std::uint64_t trials = 100000;
    for (auto _ : state)
        benchmark::DoNotOptimize(simulate::monte_carlo(inst, policy, trials, 42));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * trials));
}
BENCHMARK(BM_monte_carlo)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
