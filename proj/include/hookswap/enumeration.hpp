#pragma once

#include "hookswap/kernels.hpp"
#include "hookswap/partition.hpp"

#include <climits>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hookswap {

struct PartBounds {
    int max_part = INT_MAX;
    int min_part = 1;
    std::size_t max_length = SIZE_MAX;
};

/// All partitions of n within the bounds, each once, in decreasing
/// lexicographic order.
[[nodiscard]] std::vector<Partition> partitions_of(int n, PartBounds bounds = {});

/// Every (lambda, v) with lambda a partition of n: partitions in the order of
/// partitions_of, cells by part index then column.
[[nodiscard]] std::vector<PointedPartition> pointed_partitions_of(int n);

/// Joint distribution of a statistic tuple over the pointed partitions of n.
struct DistTable {
    int n = 0;
    StatKey kind = StatKey::alm;
    std::map<std::vector<int>, std::uint64_t> counts;

    [[nodiscard]] std::uint64_t count(const std::vector<int>& key) const;
    [[nodiscard]] std::uint64_t total() const;

    /// Tab-separated, header row of statistic names then "count", rows
    /// sorted by tuple.
    [[nodiscard]] std::string to_tsv() const;
    [[nodiscard]] std::string to_json() const;
};

[[nodiscard]] DistTable distribution(int n, StatKey kind, Exec exec = Exec::parallel);

/// Brute-force |F_n(a,l,m)|.
[[nodiscard]] std::uint64_t f_count(int n, int a, int l, int m);

struct VerifyReport {
    VerifyReport(std::string name, std::string checked_range)
        : check_name(std::move(name))
        , range(std::move(checked_range))
    {}

    std::string check_name;
    std::string range;
    std::uint64_t checked = 0;
    std::vector<std::string> failures;
    bool passed = true;

    void fail(std::string what, std::size_t cap);
    [[nodiscard]] std::string summary() const;
};

struct VerifyOptions {
    std::size_t max_failures = 10;
    Exec exec = Exec::parallel;
};

/// phi(phi(x)) == x and (a,l,m) -> (a,m,l) on every pointed partition of n <= n_max.
[[nodiscard]] VerifyReport verify_involution(int n_max, const VerifyOptions& opt = {});

/// (a,l,m) table invariant under l <-> m, (h,p) table symmetric.
[[nodiscard]] VerifyReport verify_symmetry(int n_max, const VerifyOptions& opt = {});

/// (a,m) and (a,l) tables equal, and each depends only on the sum of its
/// two entries.
[[nodiscard]] VerifyReport verify_supersymmetry(int n_max, const VerifyOptions& opt = {});

/// zeta maps F_n(arm,leg,*) injectively into F_n(arm',leg',*) and the two
/// sets have equal size, for arm+leg == arm'+leg' <= sum_max.
[[nodiscard]] VerifyReport verify_zeta(int n_max, int sum_max, const VerifyOptions& opt = {});

/// gf_f coefficients against brute-force counts for a,l,m in the box.
[[nodiscard]] VerifyReport verify_gf(int a_max, int l_max, int m_max, int n_max, const VerifyOptions& opt = {});

/// peal/unpeal are mutually inverse, weight and bound invariants hold, and
/// both sides of the bijection have the same size in each weight.
[[nodiscard]] VerifyReport verify_pealing(int n_max, int a_max, int m_max, const VerifyOptions& opt = {});

/// remark_identity_gap vanishes for 0 <= a <= a_max, 0 <= m <= m_max.
[[nodiscard]] VerifyReport verify_remark(int a_max, int m_max, int max_degree, const VerifyOptions& opt = {});

} // namespace hookswap
