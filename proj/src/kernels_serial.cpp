#include "hookswap/bijections.hpp"
#include "hookswap/kernels.hpp"

namespace hookswap::serial {

Counts tally(std::span<const PointedPartition> items, StatKey kind)
{
    Counts counts;
    for (const auto& pp : items)
        ++counts[stat_key_of(stats(pp), kind)];
    return counts;
}

namespace {

template <class Map>
MapResult map_each(std::span<const PointedPartition> items, Map&& f)
{
    MapResult out;
    out.images.resize(items.size());
    out.errors.resize(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        try {
            out.images[i] = f(items[i]);
        } catch (const std::exception& e) {
            out.errors[i] = e.what();
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
    for (std::size_t i = 0; i < items.size(); ++i)
        out[i] = check_peal_roundtrip(items[i], a, m);
    return out;
}

} // namespace hookswap::serial
