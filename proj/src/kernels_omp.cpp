#include "hookswap/bijections.hpp"
#include "hookswap/kernels.hpp"

namespace hookswap::omp {

Counts tally(std::span<const PointedPartition> items, StatKey kind)
{
    Counts counts;
    const auto n = static_cast<std::ptrdiff_t>(items.size());
#pragma omp parallel
    {
        Counts local;
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t i = 0; i < n; ++i)
            ++local[stat_key_of(stats(items[static_cast<std::size_t>(i)]), kind)];
#pragma omp critical(hookswap_tally_merge)
        for (const auto& [key, c] : local)
            counts[key] += c;
    }
    return counts;
}

namespace {

// Each slot is written by exactly one iteration; exceptions must not cross
// the parallel region.
template <class Map>
MapResult map_each(std::span<const PointedPartition> items, Map&& f)
{
    MapResult out;
    out.images.resize(items.size());
    out.errors.resize(items.size());
    const auto n = static_cast<std::ptrdiff_t>(items.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        try {
            out.images[k] = f(items[k]);
        } catch (const std::exception& e) {
            out.errors[k] = e.what();
        }
    }
    return out;
}

} // namespace

MapResult map_phi(std::span<const PointedPartition> items)
{
    return map_each(items, [](const PointedPartition& pp) { return phi(pp); });
}

MapResult map_zeta(std::span<const PointedPartition> items, int arm2, int leg2)
{
    return map_each(items, [=](const PointedPartition& pp) { return zeta(pp, arm2, leg2); });
}

SweepResult peal_roundtrip(std::span<const Partition> items, int a, int m)
{
    SweepResult out(items.size());
    const auto n = static_cast<std::ptrdiff_t>(items.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = check_peal_roundtrip(items[static_cast<std::size_t>(i)], a, m);
    return out;
}

} // namespace hookswap::omp
