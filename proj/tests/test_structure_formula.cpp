#include "dcalg/structure_formula.hpp"

#include "dcalg/formal_sum.hpp"

#include <doctest.h>

#include <random>

using namespace dcalg;

TEST_CASE("worked two-sided values at level four") {
    auto fam = Family::make(FamilyKind::Hecke, 4);
    ClassLabel two = fam->pad_label(CosetLabel{Partition::parse("2")});
    Int base = pow_int(2, 4) * factorial(4);
    CHECK(coefficient_via_theorem(fam, two, two, fam->pad_label(CosetLabel{Partition{}})).total ==
          Rational(base * 12));
    CHECK(coefficient_via_theorem(fam, two, two, two).total == Rational(base));
    CHECK(coefficient_via_theorem(fam, two, two,
                                  fam->pad_label(CosetLabel{Partition::parse("3")}))
              .total == Rational(base * 3));
    CHECK(coefficient_via_theorem(fam, two, two,
                                  fam->pad_label(CosetLabel{Partition::parse("2,2")}))
              .total == Rational(base * 2));
}

TEST_CASE("worked center values") {
    auto fam4 = Family::make(FamilyKind::CenterSym, 4);
    ClassLabel t4 = fam4->pad_label(CTLabel{Partition::parse("2")});
    auto dbl = coefficient_via_theorem(fam4, t4, t4,
                                       fam4->pad_label(CTLabel{Partition::parse("2,2")}));
    CHECK(dbl.total == 2);
    REQUIRE(dbl.terms.size() == 4);
    for (const auto& term : dbl.terms) {
        CHECK(term.intersection == 4);
        CHECK(term.k == 4);
    }
    CHECK(coefficient_via_theorem(fam4, t4, t4, fam4->pad_label(CTLabel{Partition{}})).total == 6);

    auto fam5 = Family::make(FamilyKind::CenterSym, 5);
    ClassLabel t5 = fam5->pad_label(CTLabel{Partition::parse("2")});
    CHECK(coefficient_via_theorem(fam5, t5, t5, fam5->pad_label(CTLabel{Partition::parse("3")}))
              .total == 3);
}

TEST_CASE("closed form equals brute force on mixed spot checks") {
    struct Probe {
        FamilyKind kind;
        int n;
        const char* l1;
        const char* l2;
    };
    for (auto [kind, n, a, b] : {Probe{FamilyKind::CenterSym, 5, "ct:3", "ct:2"},
                                 Probe{FamilyKind::CenterHyp, 3, "btype:∅|1", "btype:2|∅"},
                                 Probe{FamilyKind::Hecke, 3, "coset:2", "coset:2"},
                                 Probe{FamilyKind::DiagPair, 4, "ipair:2:(∅)", "ipair:1:(2)"}}) {
        auto fam = Family::make(kind, n);
        ClassLabel l1 = fam->pad_label(parse_label(a));
        ClassLabel l2 = fam->pad_label(parse_label(b));
        auto closed = theorem_decomposition(fam, l1, l2);
        auto brute = product_decomposition(fam, l1, l2);
        for (const auto& l3 : fam->labels()) {
            Rational via_t = closed.count(l3) ? closed.at(l3).total : Rational(0);
            Rational via_b = brute.count(l3) ? brute.at(l3) : Rational(0);
            CHECK(via_t == via_b);
        }
    }
}

TEST_CASE("summand contributions are positive and consistent") {
    auto fam = Family::make(FamilyKind::Hecke, 4);
    ClassLabel two = fam->pad_label(CosetLabel{Partition::parse("2")});
    for (const auto& [target, bd] : theorem_decomposition(fam, two, two)) {
        Rational sum = 0;
        for (const auto& t : bd.terms) {
            CHECK(t.contribution > 0);
            sum += t.contribution;
        }
        CHECK(bd.prefactor * sum == bd.total);
        CHECK(bd.k1 == 2);
        CHECK(bd.k2 == 2);
    }
}

TEST_CASE("value is independent of the representatives") {
    auto fam = Family::make(FamilyKind::CenterSym, 5);
    ClassLabel l1 = fam->pad_label(CTLabel{Partition::parse("2,2")});
    ClassLabel l2 = fam->pad_label(CTLabel{Partition::parse("2")});
    ClassLabel l3 = fam->pad_label(CTLabel{Partition::parse("3")});
    Rational expected = coefficient_via_theorem(fam, l1, l2, l3).total;
    auto c1 = fam->class_elements(l1);
    auto c2 = fam->class_elements(l2);
    auto c3 = fam->class_elements(l3);
    std::mt19937 rng(4242);
    for (int t = 0; t < 10; ++t) {
        const auto& x1 = c1[rng() % c1.size()];
        const auto& x2 = c2[rng() % c2.size()];
        const auto& x3 = c3[rng() % c3.size()];
        CHECK(coefficient_via_theorem(fam, x1, x2, x3).total == expected);
    }
}

TEST_CASE("the matrix family is rejected") {
    auto fam = Family::make(FamilyKind::GLCenter, 2, 3);
    ClassLabel id = fam->label_of(fam->identity());
    CHECK_THROWS_AS(coefficient_via_theorem(fam, id, id, id), std::invalid_argument);
}

TEST_CASE("empty level range gives the zero coefficient") {
    auto fam = Family::make(FamilyKind::CenterSym, 6);
    ClassLabel l1 = fam->pad_label(CTLabel{Partition::parse("2")});
    ClassLabel big = fam->pad_label(CTLabel{Partition::parse("6")});
    auto bd = coefficient_via_theorem(fam, l1, l1, big);
    CHECK(bd.total == 0);
    CHECK(bd.terms.empty());
    CHECK(structure_coefficient_bruteforce(fam, l1, l1, big) == 0);
}
