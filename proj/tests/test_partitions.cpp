#include "qcas/partitions.hpp"

#include <doctest.h>

using namespace qcas;

TEST_CASE("enumeration") {
    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(0)[0].parts.empty());
    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(9).size() == 30);
    CHECK_THROWS(enumerate_partitions(-1));

    // lexicographically descending
    std::vector<Partition> p4 = enumerate_partitions(4);
    CHECK(p4.front().parts == std::vector<int>{4});
    CHECK(p4.back().parts == std::vector<int>{1, 1, 1, 1});
    for (size_t i = 1; i < p4.size(); ++i) CHECK(p4[i - 1].parts > p4[i].parts);
}

TEST_CASE("counting matches enumeration and known values") {
    CHECK(count_partitions(0) == 1);
    CHECK(count_partitions(5) == 7);
    CHECK(count_partitions(50) == Int("204226"));
    CHECK(count_partitions(100) == Int("190569292"));
    for (int n = 0; n <= 30; ++n) CHECK(count_partitions(n) == Int(static_cast<long>(enumerate_partitions(n).size())));
}

TEST_CASE("partitions with a designated part") {
    CHECK(partitions_with_part(5, 5).size() == 1);
    CHECK(partitions_with_part(6, 7).empty());
    CHECK(partitions_with_part(9, 5).size() == 5);  // p(4)
    for (int n = 5; n <= 30; ++n)
        CHECK(Int(static_cast<long>(partitions_with_part(n, 5).size())) == count_partitions(n - 5));
}

TEST_CASE("exp and sqrt enclosures are certified") {
    Rat lo, hi;
    sqrt_enclosure(9, lo, hi);
    CHECK(lo <= 3);
    CHECK(3 <= hi);
    CHECK(hi - lo < rat(1, 1000000));

    exp_enclosure(rat(1), lo, hi);
    CHECK(lo <= hi);
    CHECK(lo > rat(27182, 10000));
    CHECK(hi < rat(27183, 10000));

    exp_enclosure(rat(6), lo, hi);
    CHECK(lo > rat(403, 1));
    CHECK(hi < rat(404, 1));
}

TEST_CASE("hardy-ramanujan checks") {
    HardyRamanujanCheck c0 = hardy_ramanujan_check(0);
    CHECK(c0.lower_bound == rat(1, 14));
    CHECK(c0.holds);  // p(0)=1 > 1/14

    HardyRamanujanCheck c9 = hardy_ramanujan_check(9);
    CHECK(c9.partition_count == 30);
    CHECK(c9.lower_bound > rat(28));   // e^6/14 = 28.8...
    CHECK(c9.upper_bound < rat(29));
    CHECK(c9.holds);

    CHECK(hardy_ramanujan_check(100).holds);
}

TEST_CASE("jordan triples") {
    SUBCASE("degenerate single box") {
        JordanTriple t = jordan_triple(make_partition({1}));
        CHECK(t.j.is_zero());
        CHECK(t.h.is_zero());
        CHECK(t.k.is_zero());
    }
    SUBCASE("the five-box block") {
        JordanTriple t = jordan_triple(make_partition({5}));
        for (int i = 0; i < 4; ++i) CHECK(t.j.at(i, i + 1) == 1);
        CHECK(t.h.at(0, 0) == 4);
        CHECK(t.h.at(1, 1) == 2);
        CHECK(t.h.at(2, 2) == 0);
        CHECK(t.h.at(3, 3) == -2);
        CHECK(t.h.at(4, 4) == -4);
    }
    SUBCASE("triple relations hold exactly for every partition of size <= 12") {
        for (int n = 1; n <= 12; ++n)
            for (const Partition& lam : enumerate_partitions(n)) {
                JordanTriple t = jordan_triple(lam);
                CHECK((commutator(t.h, t.j) - t.j.scaled(Rat(2))).is_zero());
                CHECK((commutator(t.h, t.k) + t.k.scaled(Rat(2))).is_zero());
                CHECK((commutator(t.j, t.k) - t.h).is_zero());
                CHECK(t.j.trace() == 0);
                CHECK(t.h.trace() == 0);
                CHECK(t.k.trace() == 0);
            }
    }
}
