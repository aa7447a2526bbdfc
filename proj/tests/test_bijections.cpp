#include "hookswap/bijections.hpp"
#include "hookswap/enumeration.hpp"
#include "hookswap/rimhook.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace hookswap;

namespace {

const Partition lambda{12, 10, 10, 9, 9, 8, 7, 7, 5, 5, 4, 4, 3, 2, 2, 2, 1, 1};
const Partition mu{12, 10, 10, 9, 8, 7, 7, 7, 6, 6, 5, 5, 3, 2, 2, 1, 1};

Partition pick(std::mt19937& rng, const std::vector<Partition>& pool)
{
    std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
    return pool[d(rng)];
}

} // namespace

TEST_CASE("decompose worked example")
{
    const Quintuple q = decompose(PointedPartition(lambda, Cell{6, 5}));
    CHECK(q.A == Partition{5, 5, 4, 4, 3, 2, 2, 2, 1, 1});
    CHECK(q.B == Partition{2, 1, 1});
    CHECK(q.C == Partition{12, 10, 10, 9});
    CHECK(q.D == Partition{6, 6, 6, 6});
    CHECK(q.E == Partition{3});
    CHECK(q.ctx == Context{3, 3, 5});
    CHECK(q.weight() == 101);
}

TEST_CASE("decompose degenerate shapes")
{
    const Quintuple one = decompose(PointedPartition(Partition{1}, Cell{1, 1}));
    CHECK(one.A.empty());
    CHECK(one.B.empty());
    CHECK(one.C.empty());
    CHECK(one.E.empty());
    CHECK(one.D == Partition{1});

    const Quintuple row = decompose(PointedPartition(Partition{4}, Cell{2, 1}));
    CHECK(row.ctx == Context{2, 0, 1});
    CHECK(row.A.empty());
    CHECK(row.B.empty());
    CHECK(row.C.empty());
    CHECK(row.D == Partition{2});
    CHECK(row.E == Partition{2});
}

TEST_CASE("recompose inverts decompose")
{
    CHECK(recompose(decompose(PointedPartition(lambda, Cell{6, 5}))) == PointedPartition(lambda, Cell{6, 5}));
    const Quintuple unit{{}, {}, {}, Partition{1}, {}, Context{0, 0, 0}};
    CHECK(recompose(unit) == PointedPartition(Partition{1}, Cell{1, 1}));

    for (int n = 1; n <= 10; ++n) {
        for (const auto& pp : pointed_partitions_of(n)) {
            const Quintuple q = decompose(pp);
            CHECK_NOTHROW(q.validate());
            CHECK(q.weight() == n);
            CHECK(recompose(q) == pp);
        }
    }
}

TEST_CASE("random quintuples survive recompose then decompose")
{
    std::mt19937 rng(20091);
    std::uniform_int_distribution<int> small(0, 3);
    for (int trial = 0; trial < 400; ++trial) {
        const int a = small(rng), l = small(rng), m = small(rng);
        std::vector<Partition> As, Bs, Cs;
        for (int w = 0; w <= 8; ++w) {
            for (auto& p : partitions_of(w, PartBounds{m}))
                As.push_back(p);
            for (auto& p : partitions_of(w, PartBounds{a, 1, static_cast<std::size_t>(l)}))
                Bs.push_back(p);
        }
        for (int w = 0; w <= 20; ++w)
            for (auto& p : partitions_of(w, PartBounds{INT_MAX, m + a + 1, 3}))
                Cs.push_back(p);
        const Quintuple q{pick(rng, As), pick(rng, Bs), pick(rng, Cs), rectangle(l + 1, m + 1),
                          rectangle(a > 0 ? 1 : 0, a), Context{a, l, m}};
        const PointedPartition pp = recompose(q);
        CHECK(decompose(pp) == q);
        CHECK(pp.partition().weight() == q.weight());
        const StatTuple s = stats(pp);
        CHECK(Context{s.arm, s.leg, s.coarm} == q.ctx);
    }
}

TEST_CASE("quintuple validation names the broken region")
{
    Quintuple q = decompose(PointedPartition(lambda, Cell{6, 5}));
    q.D = Partition{6, 6, 6};
    CHECK_THROWS_WITH_AS(q.validate(), doctest::Contains("D must be"), ValidationError);
    q = decompose(PointedPartition(lambda, Cell{6, 5}));
    q.A = Partition{6};
    CHECK_THROWS_WITH_AS((void)recompose(q), doctest::Contains("A must"), ValidationError);
    q = decompose(PointedPartition(lambda, Cell{6, 5}));
    q.C = Partition{8};
    CHECK_THROWS_WITH_AS(q.validate(), doctest::Contains("C must"), ValidationError);
    q = decompose(PointedPartition(lambda, Cell{6, 5}));
    q.B = Partition{4};
    CHECK_THROWS_WITH_AS(q.validate(), doctest::Contains("B must"), ValidationError);
    q = decompose(PointedPartition(lambda, Cell{6, 5}));
    q.E = Partition{};
    CHECK_THROWS_WITH_AS(q.validate(), doctest::Contains("E must"), ValidationError);
}

TEST_CASE("to_tilde worked example")
{
    const Quintuple q = decompose(PointedPartition(lambda, Cell{6, 5}));
    const TildeQuintuple tq = to_tilde(q);
    CHECK(tq.At == Partition{5, 3, 1});
    CHECK(tq.Ct == Partition{12, 10, 10, 9, 8, 7, 5});
    CHECK(tq.B == q.B);
    CHECK(tq.D == q.D);
    CHECK(tq.E == q.E);
    CHECK(tq.weight() == 101);
    CHECK(from_tilde(tq) == q);
}

TEST_CASE("to_tilde small cases")
{
    const Quintuple empty_a{{}, {}, Partition{9, 7}, rectangle(2, 3), Partition{2}, Context{2, 1, 2}};
    const TildeQuintuple te = to_tilde(empty_a);
    CHECK(te.At.empty());
    CHECK(te.Ct == empty_a.C);
    CHECK(from_tilde(te) == empty_a);

    // peal((2,2,1,1), 1, 2) = ((1); 2, 3), glued below (5,4)
    const Quintuple q{Partition{2, 2, 1, 1}, {}, Partition{5, 4}, rectangle(1, 3), Partition{1}, Context{1, 0, 2}};
    const TildeQuintuple tq = to_tilde(q);
    CHECK(tq.At == Partition{1});
    CHECK(tq.Ct == Partition{5, 4, 3, 2});
    CHECK(tq.weight() == q.weight());
    CHECK(from_tilde(tq) == q);
}

TEST_CASE("from_tilde inverts to_tilde on F_n, n <= 12")
{
    for (int n = 1; n <= 12; ++n) {
        for (const auto& pp : pointed_partitions_of(n)) {
            const Quintuple q = decompose(pp);
            const TildeQuintuple tq = to_tilde(q);
            CHECK_NOTHROW(tq.validate());
            CHECK(tq.weight() == n);
            CHECK(from_tilde(tq) == q);
        }
    }
}

TEST_CASE("rho")
{
    const TildeQuintuple tq = to_tilde(decompose(PointedPartition(lambda, Cell{6, 5})));
    const TildeQuintuple r = rho(tq);
    CHECK(r.At == Partition{3, 1});
    CHECK(r.B == Partition{3, 2, 2, 1, 1});
    CHECK(r.D == Partition{4, 4, 4, 4, 4, 4});
    CHECK(r.Ct == tq.Ct);
    CHECK(r.E == tq.E);
    CHECK(r.ctx == Context{3, 5, 3});
    CHECK(rho(r) == tq);

    const TildeQuintuple unit{{}, {}, {}, Partition{1}, {}, Context{0, 0, 0}};
    CHECK(rho(unit) == unit);

    for (int n = 1; n <= 10; ++n) {
        for (const auto& pp : pointed_partitions_of(n)) {
            const TildeQuintuple t = to_tilde(decompose(pp));
            const TildeQuintuple f = rho(t);
            CHECK_NOTHROW(f.validate());
            CHECK(f.weight() == t.weight());
            CHECK(f.ctx == Context{t.ctx.a, t.ctx.m, t.ctx.l});
            CHECK(rho(f) == t);
        }
    }
}

TEST_CASE("phi worked example")
{
    const PointedPartition out = phi(PointedPartition(lambda, Cell{6, 5}));
    CHECK(out.partition() == mu);
    CHECK(out.cell() == Cell{4, 7});
    CHECK(phi(out) == PointedPartition(lambda, Cell{6, 5}));

    const PhiTrace t = phi_trace(PointedPartition(lambda, Cell{6, 5}));
    CHECK(t.back.ctx == Context{3, 5, 3});
    CHECK(t.back.C == Partition{12, 10, 10, 9, 8, 7});
    CHECK(t.back.A == Partition{3, 2, 2, 1, 1});
    CHECK(t.result == out);

    const PointedPartition unit(Partition{1}, Cell{1, 1});
    CHECK(phi(unit) == unit);
}

TEST_CASE("phi on F_4 swaps (h, p)")
{
    std::vector<std::pair<int, int>> hp, ph;
    for (const auto& pp : pointed_partitions_of(4)) {
        const StatTuple s = stats(pp);
        const StatTuple t = stats(phi(pp));
        CHECK(t.hook == s.part_len);
        CHECK(t.part_len == s.hook);
        hp.emplace_back(s.hook, s.part_len);
        ph.emplace_back(t.hook, t.part_len);
    }
    CHECK(hp.size() == 20);
    std::sort(hp.begin(), hp.end());
    std::sort(ph.begin(), ph.end());
    CHECK(hp == ph);
}

TEST_CASE("phi is an involution exchanging leg and coarm, n <= 10")
{
    for (int n = 0; n <= 10; ++n) {
        for (const auto& pp : pointed_partitions_of(n)) {
            const PointedPartition img = phi(pp);
            const StatTuple s = stats(pp);
            const StatTuple t = stats(img);
            CHECK(img.partition().weight() == n);
            CHECK(t.arm == s.arm);
            CHECK(t.leg == s.coarm);
            CHECK(t.coarm == s.leg);
            CHECK(phi(img) == pp);
        }
    }
}

TEST_CASE("tau")
{
    CHECK(tau(PointedPartition(Partition{4}, Cell{1, 1}), 0, 3).cell() == Cell{4, 1});
    const PointedPartition u = tau(PointedPartition(Partition{4}, Cell{2, 1}), 1, 2);
    CHECK(u.cell() == Cell{3, 1});
    CHECK(stats(u).arm == 1);
    CHECK(stats(u).coarm == 2);
    CHECK_THROWS_AS((void)tau(PointedPartition(Partition{4}, Cell{2, 1}), 1, 1), ValidationError);
    CHECK_THROWS_AS((void)tau(PointedPartition(Partition{4}, Cell{2, 1}), 4, -1), ValidationError);

    for (const auto& pp : pointed_partitions_of(10)) {
        const StatTuple s = stats(pp);
        const int sum = s.arm + s.coarm;
        for (int arm2 = 0; arm2 <= sum; ++arm2) {
            const PointedPartition moved = tau(pp, arm2, sum - arm2);
            CHECK(moved.partition() == pp.partition());
            CHECK(stats(moved).arm == arm2);
            CHECK(tau(moved, s.arm, s.coarm) == pp);
        }
    }
}

TEST_CASE("zeta")
{
    const PointedPartition unit(Partition{1}, Cell{1, 1});
    CHECK(zeta(unit, 0, 0) == unit);
    CHECK_THROWS_AS((void)zeta(unit, 1, 0), ValidationError);

    for (int n = 1; n <= 9; ++n) {
        for (const auto& pp : pointed_partitions_of(n)) {
            const StatTuple s = stats(pp);
            CHECK(zeta(pp, s.arm, s.leg) == pp);
            const int sum = s.arm + s.leg;
            for (int arm2 = 0; arm2 <= sum; ++arm2) {
                const PointedPartition img = zeta(pp, arm2, sum - arm2);
                const StatTuple t = stats(img);
                CHECK(t.arm == arm2);
                CHECK(t.leg == sum - arm2);
                CHECK(img.partition().weight() == n);
                CHECK(zeta(img, s.arm, s.leg) == pp);
            }
        }
    }

    // |F_n(arm, leg, *)| depends only on arm + leg
    for (int n = 1; n <= 12; ++n) {
        std::map<std::pair<int, int>, int> count;
        for (const auto& pp : pointed_partitions_of(n)) {
            const StatTuple s = stats(pp);
            ++count[{s.arm, s.leg}];
        }
        for (int sum = 0; sum <= 4; ++sum)
            for (int arm = 1; arm <= sum; ++arm)
                CHECK(count[{arm, sum - arm}] == count[{0, sum}]);
    }
}
