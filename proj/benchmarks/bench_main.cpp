#include <benchmark/benchmark.h>

#include "wittcheck/diffword.hpp"
#include "wittcheck/sympoly.hpp"
#include "wittcheck/witt.hpp"
#include "wittcheck/young.hpp"

using namespace wittcheck;

static void BM_DTableSweep(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        DTable table;
        for (const auto& j : partitions(n)) benchmark::DoNotOptimize(table.value(j));
    }
}
BENCHMARK(BM_DTableSweep)->Arg(12)->Arg(20)->Arg(30);

static void BM_PowerWord(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(power_word(n));
}
BENCHMARK(BM_PowerWord)->Arg(4)->Arg(12)->Arg(30);

static void BM_LhsSumBruteForce(benchmark::State& state) {
    const Prime p(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lhs_sum(p, false, 1));
}
BENCHMARK(BM_LhsSumBruteForce)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_LhsSumPrefixSets(benchmark::State& state) {
    const Prime p(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lhs_sum_by_prefix_sets(p));
}
BENCHMARK(BM_LhsSumPrefixSets)->Arg(5)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_PPowerSweep(benchmark::State& state) {
    const Prime p(static_cast<std::uint32_t>(state.range(0)));
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < p.value(); ++i) count *= p.value();
    for (auto _ : state) {
        for (std::uint64_t i = 0; i < count; ++i) {
            benchmark::DoNotOptimize(p_power(Derivation(TruncPoly::from_index(p, ModulusVariant::XP, i))));
        }
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * count));
}
BENCHMARK(BM_PPowerSweep)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
