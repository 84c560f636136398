#include "dcalg/perm.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace dcalg;

namespace {

Perm random_perm(int degree, std::mt19937& rng) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return Perm(std::move(img));
}

}  // namespace

TEST_CASE("compose applies the right factor first") {
    Perm s = Perm::parse_cycles("(1 2)", 3);
    Perm t = Perm::parse_cycles("(2 3)", 3);
    CHECK(s.compose(s) == Perm::identity(3));
    // point-by-point oracle for (1 2) after (2 3): 1->1->2, 2->3->3, 3->2->1
    Perm st = s.compose(t);
    CHECK(st.apply(0) == 1);
    CHECK(st.apply(1) == 2);
    CHECK(st.apply(2) == 0);
    CHECK(st == Perm::parse_cycles("(1 2 3)", 3));
    std::mt19937 rng(7);
    Perm p = random_perm(6, rng);
    CHECK(p.compose(Perm::identity(6)) == p);
}

TEST_CASE("inverse") {
    CHECK(Perm::identity(4).inverse() == Perm::identity(4));
    CHECK(Perm::parse_cycles("(1 2 3)", 3).inverse() == Perm::parse_cycles("(1 3 2)", 3));
    Perm t = Perm::parse_cycles("(2 4)", 5);
    CHECK(t.inverse() == t);
    std::mt19937 rng(11);
    for (int i = 0; i < 20; ++i) {
        Perm p = random_perm(8, rng);
        CHECK(p.compose(p.inverse()) == Perm::identity(8));
    }
}

TEST_CASE("cycle type") {
    CHECK(Perm::identity(4).cycle_type() == Partition::parse("1,1,1,1"));
    CHECK(Perm::parse_cycles("(1 2)", 4).cycle_type() == Partition::parse("2,1,1"));
    CHECK(Perm::parse_cycles("(1 4 2 3)", 4).cycle_type() == Partition::parse("4"));
}

TEST_CASE("embed modes") {
    Perm t = Perm::parse_cycles("(1 2)", 2);
    CHECK(t.embed(4, EmbedMode::FixTop) == Perm::parse_cycles("(1 2)", 4));
    CHECK(Perm::identity(2).embed(5, EmbedMode::FixBottom) == Perm::identity(5));
    // re-indexing {1,2} -> {2,3}
    CHECK(t.embed(3, EmbedMode::FixBottom) == Perm::parse_cycles("(2 3)", 3));
    CHECK_THROWS(t.embed(1, EmbedMode::FixTop));
}

TEST_CASE("cycle type is a conjugation invariant") {
    for (const auto& s : symmetric_group(4))
        for (const auto& t : symmetric_group(4))
            CHECK(s.compose(t).compose(s.inverse()).cycle_type() == t.cycle_type());
    std::mt19937 rng(13);
    for (int i = 0; i < 200; ++i) {
        Perm s = random_perm(10, rng), t = random_perm(10, rng);
        CHECK(s.compose(t).compose(s.inverse()).cycle_type() == t.cycle_type());
    }
}

TEST_CASE("embedding pads the cycle type with fixed points") {
    std::mt19937 rng(17);
    for (int i = 0; i < 50; ++i) {
        Perm p = random_perm(5, rng);
        for (EmbedMode mode : {EmbedMode::FixTop, EmbedMode::FixBottom})
            CHECK(p.embed(9, mode).cycle_type() ==
                  p.cycle_type().unite(Partition{}.pad_to(4)));
    }
}

TEST_CASE("composition is associative") {
    std::mt19937 rng(19);
    for (int i = 0; i < 100; ++i) {
        Perm a = random_perm(9, rng), b = random_perm(9, rng), c = random_perm(9, rng);
        CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
    }
}

TEST_CASE("lexicographic enumeration") {
    auto s3 = symmetric_group(3);
    REQUIRE(s3.size() == 6);
    CHECK(s3.front() == Perm::identity(3));
    for (size_t i = 1; i < s3.size(); ++i) CHECK(s3[i - 1] < s3[i]);
}

TEST_CASE("cycle notation round trip") {
    std::mt19937 rng(23);
    for (int i = 0; i < 50; ++i) {
        Perm p = random_perm(7, rng);
        CHECK(Perm::parse_cycles(p.str() == "()" ? "" : p.str(), 7) == p);
    }
    CHECK(Perm::parse_cycles("(1 2)(3 4)", 6).max_moved() == 4);
    CHECK(Perm::identity(6).max_moved() == 0);
}
