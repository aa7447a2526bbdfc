// Serial reference vs OpenMP kernels on the pointed partitions of n.

#include "hookswap/enumeration.hpp"
#include "hookswap/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace hookswap;

namespace {

const std::vector<PointedPartition>& items(int n)
{
    static std::map<int, std::vector<PointedPartition>> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, pointed_partitions_of(n)).first;
    return it->second;
}

template <Exec E>
void BM_map_phi(benchmark::State& state)
{
    const auto& xs = items(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(map_phi(xs, E));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}

template <Exec E>
void BM_tally(benchmark::State& state)
{
    const auto& xs = items(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(tally(xs, StatKey::alm, E));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}

template <Exec E>
void BM_peal_roundtrip(benchmark::State& state)
{
    const auto parts = partitions_of(static_cast<int>(state.range(0)), PartBounds{4});
    for (auto _ : state)
        benchmark::DoNotOptimize(peal_roundtrip(parts, 3, 4, E));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(parts.size()));
}

} // namespace

BENCHMARK(BM_map_phi<Exec::serial>)->Arg(14)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_map_phi<Exec::parallel>)->Arg(14)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_tally<Exec::serial>)->Arg(14)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_tally<Exec::parallel>)->Arg(14)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_peal_roundtrip<Exec::serial>)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_peal_roundtrip<Exec::parallel>)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
