#include <benchmark/benchmark.h>

#include "divorient/exact.hpp"

using namespace divorient;

static void BM_ExactEnumeration(benchmark::State& state)
{
    const auto n = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_expectation_polynomial(n, {kDefaultEdgeLimit, 1}));
}
BENCHMARK(BM_ExactEnumeration)->Arg(9)->Arg(11)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
