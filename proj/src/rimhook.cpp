#include "hookswap/rimhook.hpp"

#include <string>

namespace hookswap {

namespace {

void require_context(int a, int m)
{
    if (a < 0 || m < 0)
        throw ValidationError("pealing context requires a >= 0 and m >= 0, got a=" + std::to_string(a)
                              + " m=" + std::to_string(m));
}

// Shrinks rows y..y+leg in place to the rim-hook-free shape.
void strip_rim(std::vector<int>& rows, int x, std::size_t y)
{
    std::size_t r = y;
    while (r < rows.size() && rows[r] >= x) {
        rows[r - 1] = rows[r] - 1;
        ++r;
    }
    rows[r - 1] = x - 1;
    while (!rows.empty() && rows.back() == 0)
        rows.pop_back();
}

} // namespace

std::vector<Cell> hook_cells(const Partition& p, Cell v)
{
    require_cell(p, v);
    std::vector<Cell> cells{v};
    for (int x = v.x + 1; x <= p.part(static_cast<std::size_t>(v.y)); ++x)
        cells.push_back({x, v.y});
    for (std::size_t y = static_cast<std::size_t>(v.y) + 1; y <= p.length() && p.part(y) >= v.x; ++y)
        cells.push_back({v.x, static_cast<int>(y)});
    return cells;
}

RimHook rim_hook(const Partition& p, Cell v)
{
    require_cell(p, v);
    const int leg = leg_length(p, v);
    RimHook hook;
    // row r holds boundary columns max(x, p_{r+1}) .. p_r
    for (int r = v.y + leg; r >= v.y; --r) {
        const int row = p.part(static_cast<std::size_t>(r));
        const int from = std::max(v.x, p.part(static_cast<std::size_t>(r) + 1));
        for (int c = from; c <= row; ++c)
            hook.cells.push_back({c, r});
    }
    hook.length = static_cast<int>(hook.cells.size());
    hook.height = leg + 1;
    hook.width = p.part(static_cast<std::size_t>(v.y)) - v.x + 1;
    return hook;
}

Partition remove_rim_hook(const Partition& p, Cell v)
{
    require_cell(p, v);
    std::vector<int> rows = p.vec();
    strip_rim(rows, v.x, static_cast<std::size_t>(v.y));
    return Partition::trusted(std::move(rows));
}

PealingResult peal(const Partition& partition, int a, int m)
{
    require_context(a, m);
    if (partition.largest() > m) {
        throw ValidationError("pealing requires largest part <= m: largest part is "
                              + std::to_string(partition.largest()) + ", m=" + std::to_string(m));
    }
    PealingResult out;
    out.a = a;
    out.m = m;
    std::vector<int> rows = partition.vec();
    const auto height = static_cast<std::size_t>(a) + 1;
    while (rows.size() >= height) {
        // column-1 cell whose leg is exactly a
        const std::size_t y = rows.size() - static_cast<std::size_t>(a);
        out.hook_lengths.push_back(rows[y - 1] + a);
        strip_rim(rows, 1, y);
    }
    out.reduced = Partition::trusted(std::move(rows));
    return out;
}

Partition unpeal(const Partition& reduced, const std::vector<int>& hook_lengths, int a, int m)
{
    require_context(a, m);
    if (reduced.length() > static_cast<std::size_t>(a))
        throw ValidationError("unpeal requires at most a parts in the reduced partition: length "
                              + std::to_string(reduced.length()) + " > a=" + std::to_string(a));
    if (reduced.largest() > m)
        throw ValidationError("unpeal requires reduced parts <= m: largest part " + std::to_string(reduced.largest())
                              + " > m=" + std::to_string(m));
    for (std::size_t i = 0; i < hook_lengths.size(); ++i) {
        const int r = hook_lengths[i];
        if (r < a + 1 || r > a + m)
            throw ValidationError("hook length r_" + std::to_string(i + 1) + " = " + std::to_string(r)
                                  + " outside [a+1, a+m] = [" + std::to_string(a + 1) + ", " + std::to_string(a + m)
                                  + "]");
        if (i > 0 && hook_lengths[i - 1] > r)
            throw ValidationError("hook lengths must be weakly increasing: r_" + std::to_string(i) + " > r_"
                                  + std::to_string(i + 1));
    }

    std::vector<int> rows = reduced.vec();
    for (auto it = hook_lengths.rbegin(); it != hook_lengths.rend(); ++it) {
        const int head = *it - a;
        std::size_t alpha = 0; // 0-based
        while (alpha < rows.size() && rows[alpha] >= head)
            ++alpha;
        // the previous insertion has leg exactly a, so nothing lies past alpha + a
        if (rows.size() > alpha + static_cast<std::size_t>(a))
            throw std::logic_error("unpeal: rows beyond the inserted hook");
        std::vector<int> next(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(alpha));
        next.push_back(head);
        for (std::size_t j = alpha; j < alpha + static_cast<std::size_t>(a); ++j)
            next.push_back((j < rows.size() ? rows[j] : 0) + 1);
        rows = std::move(next);
    }
    return Partition(std::move(rows));
}

} // namespace hookswap
