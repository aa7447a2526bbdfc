#pragma once

// Data-parallel kernels used by the verification harness. Each kernel has a
// serial reference and an OpenMP version with identical output; tests
// compare the two and bench/ times them.

#include "hookswap/partition.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hookswap {

enum class Exec { serial, parallel };

/// Statistic tuple used as a distribution key.
enum class StatKey { alm, hp, am, al };

[[nodiscard]] std::string to_string(StatKey kind);
/// Throws ValidationError for unknown names.
[[nodiscard]] StatKey parse_stat_key(const std::string& text);
/// Column names, e.g. {"a", "l", "m"}.
[[nodiscard]] std::vector<std::string> stat_key_columns(StatKey kind);
[[nodiscard]] std::vector<int> stat_key_of(const StatTuple& s, StatKey kind);

using Counts = std::map<std::vector<int>, std::uint64_t>;

/// Image of each input under a map, or the error message it raised.
struct MapResult {
    std::vector<std::optional<PointedPartition>> images;
    std::vector<std::string> errors; // same length; empty string when the map succeeded
};

/// Per-item failure description from a partition sweep; empty when the item passed.
using SweepResult = std::vector<std::string>;

namespace serial {

[[nodiscard]] Counts tally(std::span<const PointedPartition> items, StatKey kind);
[[nodiscard]] MapResult map_phi(std::span<const PointedPartition> items);
[[nodiscard]] MapResult map_zeta(std::span<const PointedPartition> items, int arm2, int leg2);
[[nodiscard]] SweepResult peal_roundtrip(std::span<const Partition> items, int a, int m);

} // namespace serial

namespace omp {

[[nodiscard]] Counts tally(std::span<const PointedPartition> items, StatKey kind);
[[nodiscard]] MapResult map_phi(std::span<const PointedPartition> items);
[[nodiscard]] MapResult map_zeta(std::span<const PointedPartition> items, int arm2, int leg2);
[[nodiscard]] SweepResult peal_roundtrip(std::span<const Partition> items, int a, int m);

} // namespace omp

[[nodiscard]] Counts tally(std::span<const PointedPartition> items, StatKey kind, Exec exec);
[[nodiscard]] MapResult map_phi(std::span<const PointedPartition> items, Exec exec);
[[nodiscard]] MapResult map_zeta(std::span<const PointedPartition> items, int arm2, int leg2, Exec exec);
[[nodiscard]] SweepResult peal_roundtrip(std::span<const Partition> items, int a, int m, Exec exec);

/// Checks one peal/unpeal roundtrip and the pealing invariants; returns an
/// empty string on success. Shared by both kernel flavours.
[[nodiscard]] std::string check_peal_roundtrip(const Partition& A, int a, int m);

} // namespace hookswap
