#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hookswap {

/// Raised when a value breaks one of the structural invariants of the
/// library (non-monotone parts, cell outside a diagram, bad context, ...).
/// The message always names the violated invariant.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A weakly decreasing sequence of positive integers, stored without
/// trailing zeros. The empty partition is a regular value.
class Partition {
public:
    Partition() = default;

    /// Validating constructor; throws ValidationError on increasing pairs,
    /// zeros or negative parts.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Builds a partition from a sequence that may carry trailing zeros
    /// (drops them, then validates).
    static Partition from_padded(std::vector<int> parts);

    /// Skips validation. Only for callers that construct parts which are
    /// decreasing and positive by construction.
    static Partition trusted(std::vector<int> parts) noexcept;

    [[nodiscard]] std::span<const int> parts() const noexcept { return parts_; }
    [[nodiscard]] const std::vector<int>& vec() const noexcept { return parts_; }
    [[nodiscard]] std::size_t length() const noexcept { return parts_.size(); }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
    [[nodiscard]] std::int64_t weight() const noexcept;
    [[nodiscard]] int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    [[nodiscard]] int smallest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }

    /// 1-based part access; returns 0 for indices past the end.
    [[nodiscard]] int part(std::size_t index) const noexcept
    {
        return index >= 1 && index <= parts_.size() ? parts_[index - 1] : 0;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    struct Unchecked {};
    Partition(Unchecked, std::vector<int> parts) noexcept : parts_(std::move(parts)) {}

    std::vector<int> parts_;
};

/// A diagram position: x is the column, y the part index, both 1-based.
struct Cell {
    int x = 1;
    int y = 1;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

[[nodiscard]] bool contains(const Partition& p, Cell v) noexcept;

/// Throws ValidationError unless v lies in the diagram of p.
void require_cell(const Partition& p, Cell v);

/// A partition together with a distinguished cell of its diagram.
class PointedPartition {
public:
    PointedPartition(Partition partition, Cell cell);

    [[nodiscard]] const Partition& partition() const noexcept { return partition_; }
    [[nodiscard]] Cell cell() const noexcept { return cell_; }

    friend bool operator==(const PointedPartition&, const PointedPartition&) = default;

private:
    Partition partition_;
    Cell cell_;
};

/// Arm, leg, coarm, coleg, hook length and part length of a cell.
struct StatTuple {
    int arm = 0;
    int leg = 0;
    int coarm = 0;
    int coleg = 0;
    int hook = 0;
    int part_len = 0;

    friend bool operator==(const StatTuple&, const StatTuple&) = default;
};

[[nodiscard]] Partition make_partition(std::span<const int> parts);
[[nodiscard]] Partition conjugate(const Partition& p);
[[nodiscard]] std::int64_t weight(const Partition& p) noexcept;
[[nodiscard]] StatTuple stats(const Partition& p, Cell v);
[[nodiscard]] inline StatTuple stats(const PointedPartition& pp) { return stats(pp.partition(), pp.cell()); }

/// Leg length alone: number of j > y with p_j >= x.
[[nodiscard]] int leg_length(const Partition& p, Cell v) noexcept;

// Text encodings shared by the CLI and JSON output: "5,3,1" (empty string
// for the empty partition) and "x,y".
[[nodiscard]] std::string to_string(const Partition& p);
[[nodiscard]] std::string to_string(Cell v);
[[nodiscard]] Partition parse_partition(const std::string& text);
[[nodiscard]] Cell parse_cell(const std::string& text);

} // namespace hookswap
