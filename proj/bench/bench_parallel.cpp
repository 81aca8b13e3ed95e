// Serial reference vs OpenMP kernels. On a single core the two should be
// close; the gap shows scheduling overhead.

#include "latres/constructions.hpp"
#include "latres/order.hpp"
#include "latres/pipeline.hpp"

#include <benchmark/benchmark.h>

using namespace latres;

namespace
{

Execution mode(const benchmark::State& state)
{
    return state.range(1) == 0 ? Execution::Serial : Execution::Parallel;
}

void label(benchmark::State& state)
{
    state.SetLabel(state.range(1) == 0 ? "serial" : "parallel");
}

void BM_Seeds(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(slim_distributive_seeds(static_cast<int>(state.range(0)), mode(state)));
    label(state);
}

void BM_Census(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(census(static_cast<int>(state.range(0)), mode(state)).size());
    label(state);
}

void BM_BoundedClosure(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(bounded_closure(static_cast<int>(state.range(0)), mode(state)));
    label(state);
}

// Meet table by dynamic programming vs pairwise bitset search.
void BM_MeetTable(benchmark::State& state)
{
    const Diagram d = grid(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(OrderIndex(d).is_lattice());
    state.SetLabel("dp");
}

void BM_MeetSearch(benchmark::State& state)
{
    const Diagram d = grid(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    const OrderIndex o(d);
    for (auto _ : state)
    {
        int acc = 0;
        for (ElementId x = 0; x < d.size(); ++x)
            for (ElementId y = 0; y < d.size(); ++y)
                acc += *o.try_meet(x, y);
        benchmark::DoNotOptimize(acc);
    }
    state.SetLabel("bitset");
}

} // namespace

BENCHMARK(BM_Seeds)->ArgsProduct({{12, 14}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Census)->ArgsProduct({{10, 12}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoundedClosure)->ArgsProduct({{10, 12}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MeetTable)->Arg(6)->Arg(10)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MeetSearch)->Arg(6)->Arg(10)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
