#include <benchmark/benchmark.h>

#include "minorbench/blocks.hpp"
#include "minorbench/constructions.hpp"
#include "minorbench/graph_io.hpp"
#include "minorbench/paths.hpp"

using namespace minorbench;

static void BM_BlocksOfG(benchmark::State& state)
{
    const int m = static_cast<int>(state.range(0));
    const Graph g = build_G({m, m});
    for (auto _ : state)
        benchmark::DoNotOptimize(block_decomposition(g));
}
BENCHMARK(BM_BlocksOfG)->Arg(4)->Arg(16)->Arg(64);

static void BM_RowToRowPaths(benchmark::State& state)
{
    const int m = static_cast<int>(state.range(0));
    const Graph g = half_grid({m, m});
    std::vector<VertexId> bottom, top;
    for (int a = -m; a <= m; ++a) {
        bottom.push_back(*find_grid_vertex(g, a, 0));
        top.push_back(*find_grid_vertex(g, a, m));
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(max_vertex_disjoint_paths(g, bottom, top));
}
BENCHMARK(BM_RowToRowPaths)->Arg(4)->Arg(16)->Arg(32);

static void BM_Graph6RoundTrip(benchmark::State& state)
{
    const Graph g = build_G({static_cast<int>(state.range(0)), 8});
    for (auto _ : state)
        benchmark::DoNotOptimize(from_graph6(to_graph6(g)));
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(4)->Arg(16);
