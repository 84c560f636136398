#include "dcalg/formal_sum.hpp"

#include <doctest.h>

#include <random>

using namespace dcalg;

TEST_CASE("class sums have unit coefficients on their class") {
    auto sym = Family::make(FamilyKind::CenterSym, 3);
    FormalSum s = class_sum(sym, CTLabel{Partition::parse("2,1")});
    CHECK(s.support_size() == 3);
    for (const auto& [g, c] : s.terms()) CHECK(c == 1);

    auto hecke = Family::make(FamilyKind::Hecke, 2);
    CHECK(class_sum(hecke, CosetLabel{Partition::parse("1,1")}).support_size() == 8);

    auto hyp = Family::make(FamilyKind::CenterHyp, 2);
    FormalSum ident = class_sum(hyp, BTypeLabel{{Partition::parse("1,1"), Partition{}}});
    CHECK(ident.support_size() == 1);
    CHECK(ident.coefficient(hyp->identity()) == 1);
}

TEST_CASE("identity class sum is the unit of the convolution") {
    auto sym = Family::make(FamilyKind::CenterSym, 4);
    FormalSum e = class_sum(sym, CTLabel{Partition::parse("1,1,1,1")});
    FormalSum s = class_sum(sym, CTLabel{Partition::parse("3,1")});
    CHECK(e * s == s);
    CHECK(s * e == s);
}

TEST_CASE("transposition class squared in the degree-3 center") {
    auto sym = Family::make(FamilyKind::CenterSym, 3);
    FormalSum t = class_sum(sym, CTLabel{Partition::parse("2,1")});
    FormalSum prod = t * t;  // full convolution over the 9 term pairs
    auto dec = decompose(prod);
    REQUIRE(dec.size() == 2);
    CHECK(dec.at(CTLabel{Partition::parse("1,1,1")}) == 3);
    CHECK(dec.at(CTLabel{Partition::parse("3")}) == 3);
    // every 3-cycle carries coefficient 3 in the raw product
    CHECK(prod.coefficient(GroupElement{Perm::parse_cycles("(1 2 3)", 3)}) == 3);
}

TEST_CASE("decompose rejects sums that are not class functions") {
    auto sym = Family::make(FamilyKind::CenterSym, 3);
    FormalSum bad(sym);
    bad.add(GroupElement{Perm::parse_cycles("(1 2)", 3)}, 1);
    CHECK_THROWS_AS(decompose(bad), std::domain_error);
    FormalSum zero(sym);
    CHECK(decompose(zero).empty());
}

TEST_CASE("representative counting agrees with the full convolution") {
    struct Case { FamilyKind kind; int n; };
    for (auto [kind, n] : {Case{FamilyKind::CenterSym, 3}, Case{FamilyKind::CenterSym, 4},
                           Case{FamilyKind::Hecke, 2}}) {
        auto fam = Family::make(kind, n);
        auto labels = fam->labels();
        for (const auto& l1 : labels)
            for (const auto& l2 : labels) {
                FormalSum conv = class_sum(fam, l1) * class_sum(fam, l2);
                auto dec = decompose(conv);
                auto counted = product_decomposition(fam, l1, l2);
                CHECK(dec == counted);
            }
    }
}

TEST_CASE("central products decompose exactly across families") {
    struct Case { FamilyKind kind; int n; int q; };
    for (auto [kind, n, q] : {Case{FamilyKind::CenterHyp, 2, 0}, Case{FamilyKind::DiagPair, 3, 0},
                              Case{FamilyKind::GLCenter, 2, 2}}) {
        auto fam = Family::make(kind, n, q);
        auto labels = fam->labels();
        for (const auto& l1 : labels)
            for (const auto& l2 : labels)
                CHECK_NOTHROW(decompose(class_sum(fam, l1) * class_sum(fam, l2)));
    }
}

TEST_CASE("convolution is associative on random small sums") {
    auto fam = Family::make(FamilyKind::CenterSym, 4);
    auto G = fam->enumerate_G();
    std::mt19937 rng(101);
    std::uniform_int_distribution<size_t> pick(0, G.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int t = 0; t < 20; ++t) {
        FormalSum a(fam), b(fam), c(fam);
        for (int i = 0; i < 5; ++i) {
            a.add(G[pick(rng)], coeff(rng));
            b.add(G[pick(rng)], coeff(rng));
            c.add(G[pick(rng)], coeff(rng));
        }
        CHECK((a * b) * c == a * (b * c));
    }
}
