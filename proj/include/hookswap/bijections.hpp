#pragma once

#include "hookswap/partition.hpp"

#include <optional>
#include <vector>

namespace hookswap {

/// (a, l, m) = arm, leg, coarm of the distinguished cell.
struct Context {
    int a = 0;
    int l = 0;
    int m = 0;

    friend bool operator==(const Context&, const Context&) = default;
};

/// Five-region split of a pointed partition:
///   C  rows above the distinguished row,
///   D  the (l+1) x (m+1) rectangle ending at the cell,
///   E  the arm of the cell,
///   B  what sticks out right of D in the leg rows,
///   A  everything below the leg.
struct Quintuple {
    Partition A, B, C, D, E;
    Context ctx;

    [[nodiscard]] std::int64_t weight() const noexcept;
    /// Throws ValidationError naming the first violated region constraint.
    void validate() const;

    friend bool operator==(const Quintuple&, const Quintuple&) = default;
};

/// Quintuple after pealing A: At fits in an a x m box and Ct collects C
/// together with the removed hook lengths.
struct TildeQuintuple {
    Partition At, B, Ct, D, E;
    Context ctx;

    [[nodiscard]] std::int64_t weight() const noexcept;
    void validate() const;

    friend bool operator==(const TildeQuintuple&, const TildeQuintuple&) = default;
};

/// Partition made of `rows` parts equal to `width` (empty if either is 0).
[[nodiscard]] Partition rectangle(int rows, int width);

[[nodiscard]] Quintuple decompose(const PointedPartition& pp);
[[nodiscard]] PointedPartition recompose(const Quintuple& q);

[[nodiscard]] TildeQuintuple to_tilde(const Quintuple& q);
[[nodiscard]] Quintuple from_tilde(const TildeQuintuple& tq);

/// Conjugates B, At and D and swaps their roles; context (a,l,m) -> (a,m,l).
[[nodiscard]] TildeQuintuple rho(const TildeQuintuple& tq);

/// Every intermediate object of one phi evaluation, in order.
struct PhiTrace {
    Quintuple quintuple;
    TildeQuintuple tilde;
    TildeQuintuple rho_image;
    Quintuple back; ///< from_tilde(rho_image), in context (a,m,l)
    PointedPartition result;
};

/// The involution exchanging leg and coarm (hence hook length and part
/// length) on pointed partitions of n.
[[nodiscard]] PointedPartition phi(const PointedPartition& pp);
[[nodiscard]] PhiTrace phi_trace(const PointedPartition& pp);

/// Moves the cell along its row to the position with arm `arm2` and coarm
/// `coarm2`. Requires arm + coarm == arm2 + coarm2.
[[nodiscard]] PointedPartition tau(const PointedPartition& pp, int arm2, int coarm2);

/// phi . tau . phi: maps cells with (arm, leg) to cells with (arm2, leg2)
/// when arm + leg == arm2 + leg2.
[[nodiscard]] PointedPartition zeta(const PointedPartition& pp, int arm2, int leg2);

} // namespace hookswap
