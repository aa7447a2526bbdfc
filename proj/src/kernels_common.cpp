#include "hookswap/kernels.hpp"

#include "hookswap/rimhook.hpp"

namespace hookswap {

std::string to_string(StatKey kind)
{
    switch (kind) {
    case StatKey::alm: return "alm";
    case StatKey::hp: return "hp";
    case StatKey::am: return "am";
    case StatKey::al: return "al";
    }
    return "?";
}

StatKey parse_stat_key(const std::string& text)
{
    if (text == "alm")
        return StatKey::alm;
    if (text == "hp")
        return StatKey::hp;
    if (text == "am")
        return StatKey::am;
    if (text == "al")
        return StatKey::al;
    throw ValidationError("unknown statistic key \"" + text + "\" (expected alm, hp, am or al)");
}

std::vector<std::string> stat_key_columns(StatKey kind)
{
    switch (kind) {
    case StatKey::alm: return {"a", "l", "m"};
    case StatKey::hp: return {"h", "p"};
    case StatKey::am: return {"a", "m"};
    case StatKey::al: return {"a", "l"};
    }
    return {};
}

std::vector<int> stat_key_of(const StatTuple& s, StatKey kind)
{
    switch (kind) {
    case StatKey::alm: return {s.arm, s.leg, s.coarm};
    case StatKey::hp: return {s.hook, s.part_len};
    case StatKey::am: return {s.arm, s.coarm};
    case StatKey::al: return {s.arm, s.leg};
    }
    return {};
}

std::string check_peal_roundtrip(const Partition& A, int a, int m)
{
    const std::string where = "A=(" + to_string(A) + ") a=" + std::to_string(a) + " m=" + std::to_string(m) + ": ";
    try {
        const PealingResult r = peal(A, a, m);
        if (r.reduced.length() > static_cast<std::size_t>(a) || r.reduced.largest() > m)
            return where + "reduced partition (" + to_string(r.reduced) + ") not inside an a x m box";
        std::int64_t removed = 0;
        for (std::size_t i = 0; i < r.hook_lengths.size(); ++i) {
            const int len = r.hook_lengths[i];
            if (len < a + 1 || len > a + m)
                return where + "hook length " + std::to_string(len) + " outside [a+1, a+m]";
            if (i > 0 && r.hook_lengths[i - 1] > len)
                return where + "hook lengths not weakly increasing";
            removed += len;
        }
        if (A.weight() != r.reduced.weight() + removed)
            return where + "weight not conserved";
        const Partition back = unpeal(r);
        if (back != A)
            return where + "unpeal gave (" + to_string(back) + ")";
    } catch (const std::exception& e) {
        return where + "threw: " + e.what();
    }
    return {};
}

Counts tally(std::span<const PointedPartition> items, StatKey kind, Exec exec)
{
    return exec == Exec::serial ? serial::tally(items, kind) : omp::tally(items, kind);
}

MapResult map_phi(std::span<const PointedPartition> items, Exec exec)
{
    return exec == Exec::serial ? serial::map_phi(items) : omp::map_phi(items);
}

MapResult map_zeta(std::span<const PointedPartition> items, int arm2, int leg2, Exec exec)
{
    return exec == Exec::serial ? serial::map_zeta(items, arm2, leg2) : omp::map_zeta(items, arm2, leg2);
}

SweepResult peal_roundtrip(std::span<const Partition> items, int a, int m, Exec exec)
{
    return exec == Exec::serial ? serial::peal_roundtrip(items, a, m) : omp::peal_roundtrip(items, a, m);
}

} // namespace hookswap
