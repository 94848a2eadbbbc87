#include <benchmark/benchmark.h>

#include "sqf/circular.hpp"
#include "sqf/construct.hpp"
#include "sqf/extremal.hpp"
#include "sqf/squares.hpp"
#include "sqf/walks.hpp"

using namespace sqf;

static void BM_find_square(benchmark::State& state) {
    const Word w = thue_ternary(static_cast<std::size_t>(state.range(0)));
    const auto detector = state.range(1) ? Detector::Oracle : Detector::Fast;
    for (auto _ : state) benchmark::DoNotOptimize(find_square(w.letters(), detector));
}
BENCHMARK(BM_find_square)->ArgsProduct({{256, 1024, 4096}, {0, 1}})->ArgNames({"n", "oracle"});

static void BM_circular_square(benchmark::State& state) {
    const Word w = circular_square_free_ternary(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(find_circular_square(w.letters()));
}
BENCHMARK(BM_circular_square)->Arg(200)->Arg(1000);

static void BM_is_extremal(benchmark::State& state) {
    const Word w = construct_extremal(state.range(0)).word;
    for (auto _ : state) benchmark::DoNotOptimize(is_extremal(w));
}
BENCHMARK(BM_is_extremal)->Arg(2138)->Arg(10007)->Unit(benchmark::kMillisecond);

static void BM_linear_pipeline(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(construct_extremal(state.range(0)));
}
BENCHMARK(BM_linear_pipeline)->Arg(2138)->Arg(5000)->Unit(benchmark::kMillisecond);

static void BM_circular_pipeline(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(construct_extremal_circular(state.range(0)));
}
BENCHMARK(BM_circular_pipeline)->Arg(470)->Arg(5000)->Unit(benchmark::kMillisecond);

static void BM_search(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(search_extremal(n, false, 0, 100'000'000));
}
BENCHMARK(BM_search)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_spectrum(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(spectrum(state.range(0), state.range(1) != 0));
}
BENCHMARK(BM_spectrum)->Args({40, 0})->Args({30, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
