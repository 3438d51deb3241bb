#include <benchmark/benchmark.h>

#include "minorbench/constructions.hpp"
#include "minorbench/minor.hpp"
#include "minorbench/packing.hpp"

using namespace minorbench;

static void BM_FindK5InG(benchmark::State& state)
{
    const Graph host = build_G({static_cast<int>(state.range(0)), 1});
    const Graph k5 = complete_graph(5);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_minor_model(k5, host, {}));
}
BENCHMARK(BM_FindK5InG)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_K5AbsentInGrid(benchmark::State& state)
{
    const Graph host = half_grid({static_cast<int>(state.range(0)), static_cast<int>(state.range(0))});
    const Graph k5 = complete_graph(5);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_minor_model(k5, host, {}));
}
BENCHMARK(BM_K5AbsentInGrid)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_FindIInG(benchmark::State& state)
{
    const Graph host = build_G({static_cast<int>(state.range(0)), 1});
    const Graph i = build_I();
    for (auto _ : state)
        benchmark::DoNotOptimize(find_minor_model(i, host, {}));
}
BENCHMARK(BM_FindIInG)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_ExactPackingH1(benchmark::State& state)
{
    const Graph host = build_G({static_cast<int>(state.range(0)), 1});
    const Graph i = build_I();
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_packing(i, host, 3, {}));
}
BENCHMARK(BM_ExactPackingH1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_OracleK4(benchmark::State& state)
{
    const Graph host = petersen_graph();
    const Graph k4 = complete_graph(4);
    for (auto _ : state)
        benchmark::DoNotOptimize(has_minor_oracle(k4, host));
}
BENCHMARK(BM_OracleK4)->Unit(benchmark::kMillisecond);
