#include "hookswap/enumeration.hpp"
#include "hookswap/qseries.hpp"
#include "test_util.hpp"

#include <doctest.h>
#include <json.hpp>

#include <set>

using namespace hookswap;

TEST_CASE("partitions_of")
{
    const auto four = partitions_of(4);
    CHECK(four == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
    CHECK(partitions_of(10).size() == 42);
    CHECK(partitions_of(-1).empty());

    const QSeries p = q_pochhammer_inv(1, 20);
    for (int n = 0; n <= 20; ++n) {
        const auto all = partitions_of(n);
        CHECK(static_cast<std::int64_t>(all.size()) == p[n]);
        for (std::size_t i = 1; i < all.size(); ++i)
            CHECK(all[i] < all[i - 1]); // strictly decreasing lex order, so no duplicates
        for (const auto& x : all)
            CHECK(x.weight() == n);
    }
}

TEST_CASE("partitions_of with bounds")
{
    CHECK(partitions_of(5, PartBounds{2}) == std::vector<Partition>{{2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}});
    CHECK(partitions_of(5, PartBounds{INT_MAX, 2}) == std::vector<Partition>{{5}, {3, 2}});
    CHECK(partitions_of(5, PartBounds{INT_MAX, 1, 2}) == std::vector<Partition>{{5}, {4, 1}, {3, 2}});
}

TEST_CASE("pointed_partitions_of")
{
    CHECK(pointed_partitions_of(4).size() == 20);
    const auto one = pointed_partitions_of(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == PointedPartition(Partition{1}, Cell{1, 1}));
    CHECK(pointed_partitions_of(0).empty());

    for (int n = 0; n <= 12; ++n) {
        const auto all = pointed_partitions_of(n);
        std::uint64_t by_weights = 0;
        for (const auto& p : partitions_of(n))
            by_weights += static_cast<std::uint64_t>(p.weight());
        CHECK(all.size() == by_weights);
        CHECK(all.size() == static_cast<std::size_t>(n) * partitions_of(n).size());
        std::set<std::pair<std::vector<int>, std::pair<int, int>>> seen;
        for (const auto& pp : all)
            seen.insert({pp.partition().vec(), {pp.cell().x, pp.cell().y}});
        CHECK(seen.size() == all.size());
    }
    CHECK(pointed_partitions_of(6).size() == 66);

    const auto f3 = pointed_partitions_of(3);
    CHECK(f3.front() == PointedPartition(Partition{3}, Cell{1, 1}));
    CHECK(f3[3] == PointedPartition(Partition{2, 1}, Cell{1, 1}));
    CHECK(f3[4] == PointedPartition(Partition{2, 1}, Cell{2, 1}));
    CHECK(f3[5] == PointedPartition(Partition{2, 1}, Cell{1, 2}));
}

TEST_CASE("distribution of (h, p) on F_4")
{
    const DistTable t = distribution(4, StatKey::hp);
    const std::map<std::vector<int>, std::uint64_t> expected{
        {{1, 1}, 3}, {{2, 1}, 2}, {{3, 1}, 1}, {{4, 1}, 1}, {{4, 2}, 1}, {{1, 2}, 2}, {{2, 2}, 2}, {{3, 2}, 1},
        {{1, 3}, 1}, {{2, 3}, 1}, {{4, 3}, 1}, {{1, 4}, 1}, {{2, 4}, 1}, {{3, 4}, 1}, {{4, 4}, 1}};
    CHECK(t.counts == expected);
    CHECK(t.total() == 20);
    CHECK(distribution(1, StatKey::hp).counts == std::map<std::vector<int>, std::uint64_t>{{{1, 1}, 1}});
}

TEST_CASE("distribution tables")
{
    const DistTable alm = distribution(7, StatKey::alm);
    for (const auto& [k, c] : alm.counts)
        CHECK(alm.count({k[0], k[2], k[1]}) == c);
    for (int n = 0; n <= 10; ++n)
        for (StatKey kind : {StatKey::alm, StatKey::hp, StatKey::am, StatKey::al})
            CHECK(distribution(n, kind).total() == static_cast<std::uint64_t>(n) * partitions_of(n).size());
    CHECK(distribution(9, StatKey::am).counts == distribution(9, StatKey::al).counts);
}

TEST_CASE("f_count")
{
    CHECK(f_count(4, 0, 0, 0) == 3);
    CHECK(f_count(4, 3, 0, 0) == 1);
    for (int a = 0; a <= 2; ++a)
        for (int l = 0; l <= 2; ++l)
            for (int m = 0; m <= 2; ++m)
                for (int n = 0; n < (m + 1) * (l + 1) + a && n <= 10; ++n)
                    CHECK(f_count(n, a, l, m) == 0);
    const DistTable t = distribution(8, StatKey::alm);
    for (const auto& [k, c] : t.counts)
        CHECK(f_count(8, k[0], k[1], k[2]) == c);
}

TEST_CASE("table serialisation")
{
    const DistTable t = distribution(2, StatKey::hp);
    CHECK(t.to_tsv() == "h\tp\tcount\n1\t1\t1\n1\t2\t1\n2\t1\t1\n2\t2\t1\n");
    const auto j = nlohmann::json::parse(t.to_json());
    CHECK(j["n"] == 2);
    CHECK(j["kind"] == "hp");
    CHECK(j["rows"].size() == 4);
    CHECK(j["rows"][0]["h"] == 1);
    CHECK(j["rows"][0]["count"] == 1);
    CHECK(parse_stat_key("alm") == StatKey::alm);
    CHECK_THROWS_AS((void)parse_stat_key("xyz"), ValidationError);
    CHECK(distribution(3, StatKey::alm).to_tsv().starts_with("a\tl\tm\tcount\n"));
}

TEST_CASE("verification reports")
{
    CHECK(verify_involution(8).passed);
    CHECK(verify_symmetry(1).passed);
    CHECK(verify_supersymmetry(8).passed);
    CHECK(verify_gf(2, 2, 2, 20).passed);
    CHECK(verify_pealing(10, 3, 3).passed);
    CHECK(verify_remark(3, 3, 20).passed);
    CHECK(verify_zeta(8, 3).passed);
    const VerifyReport r = verify_involution(6);
    CHECK(r.failures.empty());
    CHECK(r.checked == 1 + 4 + 9 + 20 + 35 + 66);
    CHECK(r.summary().starts_with("PASS involution"));
}

TEST_CASE("verify report caps counterexamples")
{
    VerifyReport r{"demo", "n<=0"};
    for (int i = 0; i < 25; ++i)
        r.fail("bad " + std::to_string(i), 10);
    CHECK_FALSE(r.passed);
    CHECK(r.failures.size() == 10);
    CHECK(r.failures.front() == "bad 0");
    CHECK(r.summary().starts_with("FAIL demo"));
}
