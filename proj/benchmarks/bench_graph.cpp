#include <benchmark/benchmark.h>

#include "divorient/diameter.hpp"
#include "divorient/graph.hpp"
#include "divorient/numtheory.hpp"
#include "divorient/scc.hpp"

using namespace divorient;

static void BM_TauSieve(benchmark::State& state)
{
    const auto n = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(numtheory::tau_sieve(n));
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_TauSieve)->Arg(1 << 16)->Arg(1 << 20);

static void BM_BuildDivisorGraph(benchmark::State& state)
{
    const auto n = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_divisor_graph(n));
}
BENCHMARK(BM_BuildDivisorGraph)->Arg(1 << 14)->Arg(1 << 18);

static void BM_SampleAndOrient(benchmark::State& state)
{
    const auto g = build_divisor_graph(static_cast<std::uint32_t>(state.range(0)));
    OrientationBuffers buffers;
    std::uint64_t j = 0;
    for (auto _ : state) {
        const auto o = sample_orientation(g, 0.5, {1, 0}, j++);
        benchmark::DoNotOptimize(&buffers.build(g, o));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.edge_count()));
}
BENCHMARK(BM_SampleAndOrient)->Arg(1 << 14)->Arg(1 << 18);

static void BM_Tarjan(benchmark::State& state)
{
    const auto g = build_divisor_graph(static_cast<std::uint32_t>(state.range(0)));
    const auto d = oriented_adjacency(g, sample_orientation(g, 0.5, {1, 0}, 0));
    SccWorkspace ws;
    for (auto _ : state)
        benchmark::DoNotOptimize(largest_scc_size(ws.run(d)));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(d.arc_count()));
}
BENCHMARK(BM_Tarjan)->Arg(1 << 14)->Arg(1 << 18);

static void BM_IfubLargestScc(benchmark::State& state)
{
    const auto g = build_divisor_graph(static_cast<std::uint32_t>(state.range(0)));
    const auto d = oriented_adjacency(g, sample_orientation(g, 0.5, {1, 0}, 0));
    const auto core = restrict_to_largest_scc(d, strongly_connected_components(d));
    IfubSolver solver;
    IfubTrace trace;
    for (auto _ : state)
        benchmark::DoNotOptimize(solver.diameter(core.digraph, &trace));
    state.counters["bfs_runs"] = trace.bfs_runs;
    state.counters["vertices"] = core.digraph.n();
}
BENCHMARK(BM_IfubLargestScc)->Arg(1 << 12)->Arg(1 << 15)->Unit(benchmark::kMillisecond);
