#include "dcalg/partition.hpp"

#include <doctest.h>

using namespace dcalg;

TEST_CASE("z on explicit multisets") {
    CHECK(Partition::parse("2").z() == 2);
    CHECK(Partition::parse("1,1,1").z() == 6);
    CHECK(Partition::parse("3,2,2").z() == 24);
    CHECK(Partition{}.z() == 1);
}

TEST_CASE("union re-sorts the joined parts") {
    CHECK(Partition::parse("2").unite(Partition::parse("1")) == Partition::parse("2,1"));
    CHECK(Partition::parse("3,2").unite(Partition::parse("2")) == Partition::parse("3,2,2"));
    CHECK(Partition{}.unite(Partition::parse("4,1")) == Partition::parse("4,1"));
}

TEST_CASE("strip_ones and pad_to") {
    CHECK(Partition::parse("2,1,1").strip_ones() == Partition::parse("2"));
    CHECK(Partition::parse("1,1,1").strip_ones() == Partition{});
    CHECK(Partition::parse("3,2").strip_ones() == Partition::parse("3,2"));

    CHECK(Partition::parse("2").pad_to(4) == Partition::parse("2,1,1"));
    CHECK(Partition{}.pad_to(3) == Partition::parse("1,1,1"));
    CHECK(Partition::parse("3,2").pad_to(5) == Partition::parse("3,2"));
    CHECK_THROWS(Partition::parse("3,2").pad_to(4));
}

TEST_CASE("strip after pad is the identity on proper partitions") {
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : proper_partitions_up_to(n))
            if (p.size() <= n) CHECK(p.pad_to(n).strip_ones() == p);
}

TEST_CASE("pair partition uparrow") {
    PairPartition p{Partition{}, Partition::parse("1")};
    CHECK(p.uparrow(3) == PairPartition{Partition::parse("1,1"), Partition::parse("1")});
    PairPartition q{Partition::parse("2"), Partition{}};
    CHECK(q.uparrow(2) == q);
    PairPartition r{Partition{}, Partition{}};
    CHECK(r.uparrow(2) == PairPartition{Partition::parse("1,1"), Partition{}});
    CHECK_THROWS(p.uparrow(0));
}

TEST_CASE("class sizes of the symmetric group partition the order") {
    for (int n = 1; n <= 7; ++n) {
        Int total = 0;
        for (const auto& lam : partitions_of(n)) total += factorial(n) / lam.z();
        CHECK(total == factorial(n));
    }
}

TEST_CASE("grammar round trips") {
    CHECK(Partition::parse("3,2,2").str() == "3,2,2");
    CHECK(Partition::parse("").str() == "∅");
    CHECK(Partition::parse("0") == Partition{});
    CHECK(Partition::parse("∅") == Partition{});
    CHECK(PairPartition::parse("3,2|1,1").str() == "3,2|1,1");
    CHECK(PairPartition::parse("∅|2").lambda == Partition{});
    CHECK(IndexedPair::parse("2:(1,1)").str() == "2:(1,1)");
    CHECK(IndexedPair::parse("3:(∅)").lambda == Partition{});
}

TEST_CASE("partition enumeration counts") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(8).size() == 22);
}
