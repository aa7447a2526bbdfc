#pragma once

#include "hookswap/partition.hpp"

#include <vector>

namespace hookswap {

/// A border strip of a diagram. Cells run from the uppermost cell (largest
/// part index) to the rightmost one, consecutive cells sharing a side.
struct RimHook {
    std::vector<Cell> cells;
    int length = 0;
    int height = 0; ///< distinct part indices
    int width = 0;  ///< distinct columns
};

/// Output of the pealing algorithm: the reduced partition, the removed
/// rim-hook lengths in removal order, and the (a, m) context.
struct PealingResult {
    Partition reduced;
    std::vector<int> hook_lengths;
    int a = 0;
    int m = 0;

    friend bool operator==(const PealingResult&, const PealingResult&) = default;
};

/// The hook of v: v itself, then its arm cells left to right, then its leg
/// cells by increasing part index.
[[nodiscard]] std::vector<Cell> hook_cells(const Partition& p, Cell v);

[[nodiscard]] RimHook rim_hook(const Partition& p, Cell v);

/// Removes rim_hook(p, v). Row r in [y, y+leg) shrinks to p_{r+1} - 1 and
/// row y+leg to x - 1, which always leaves a partition.
[[nodiscard]] Partition remove_rim_hook(const Partition& p, Cell v);

/// Repeatedly strips the rim hook of height a+1 that starts at the top of
/// column 1, until at most a parts remain.
///
/// Throws ValidationError if a or m is negative or the largest part of
/// `partition` exceeds m.
[[nodiscard]] PealingResult peal(const Partition& partition, int a, int m);

/// Inverse of peal. Re-inserts hook lengths from last to first; each
/// insertion puts a new part r - a at the smallest index α whose part is
/// below r - a and bumps the next a parts by one.
[[nodiscard]] Partition unpeal(const Partition& reduced, const std::vector<int>& hook_lengths, int a, int m);
[[nodiscard]] inline Partition unpeal(const PealingResult& r) { return unpeal(r.reduced, r.hook_lengths, r.a, r.m); }

} // namespace hookswap
