#include "hookswap/enumeration.hpp"
#include "hookswap/kernels.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace hookswap;

TEST_CASE("OpenMP kernels match the serial reference")
{
    for (int n : {0, 1, 5, 12}) {
        const auto items = pointed_partitions_of(n);
        for (StatKey kind : {StatKey::alm, StatKey::hp, StatKey::am, StatKey::al})
            CHECK(serial::tally(items, kind) == omp::tally(items, kind));

        const MapResult s = serial::map_phi(items);
        const MapResult p = omp::map_phi(items);
        CHECK(s.images == p.images);
        CHECK(s.errors == p.errors);

        const MapResult sz = serial::map_zeta(items, 1, 1);
        const MapResult pz = omp::map_zeta(items, 1, 1);
        CHECK(sz.images == pz.images);
        CHECK(sz.errors == pz.errors);

        const auto parts = partitions_of(n, PartBounds{3});
        CHECK(serial::peal_roundtrip(parts, 2, 3) == omp::peal_roundtrip(parts, 2, 3));
    }
}

TEST_CASE("map kernels record errors per item instead of throwing")
{
    const auto items = pointed_partitions_of(4);
    const MapResult z = map_zeta(items, 2, 0, Exec::parallel);
    for (std::size_t i = 0; i < items.size(); ++i) {
        const StatTuple s = stats(items[i]);
        if (s.arm + s.leg == 2) {
            CHECK(z.images[i].has_value());
            CHECK(z.errors[i].empty());
        } else {
            CHECK_FALSE(z.images[i].has_value());
            CHECK(z.errors[i].find("zeta requires") != std::string::npos);
        }
    }
}

TEST_CASE("peal_roundtrip reports bound violations")
{
    const std::vector<Partition> items{Partition{5}};
    const SweepResult r = peal_roundtrip(items, 1, 3, Exec::serial);
    REQUIRE(r.size() == 1);
    CHECK(r[0].find("largest part") != std::string::npos);
}

TEST_CASE("serial and parallel verification agree")
{
    VerifyOptions ser;
    ser.exec = Exec::serial;
    VerifyOptions par;
    par.exec = Exec::parallel;
    CHECK(verify_involution(9, ser).checked == verify_involution(9, par).checked);
    CHECK(verify_zeta(8, 3, ser).checked == verify_zeta(8, 3, par).checked);
    CHECK(verify_pealing(10, 2, 2, ser).checked == verify_pealing(10, 2, 2, par).checked);
    CHECK(distribution(10, StatKey::alm, Exec::serial).counts == distribution(10, StatKey::alm, Exec::parallel).counts);
}
