#include "dcalg/hypotheses.hpp"

#include <doctest.h>

using namespace dcalg;

TEST_CASE("chain minimum of explicit sets") {
    auto sym = Family::make(FamilyKind::CenterSym, 4);
    // two-sided class of a transposition under the first point stabilizer
    auto D = sym->double_class(GroupElement{Perm::parse_cycles("(1 2)", 4)}, 1, 1);
    CHECK(k_min(*sym, D, KMinMode::InK) == 2);
    CHECK(k_min(*sym, {sym->identity()}, KMinMode::InK) == 0);
    CHECK_THROWS(k_min(*sym, {}, KMinMode::InK));

    for (int n : {2, 3}) {
        auto hecke = Family::make(FamilyKind::Hecke, n);
        for (const auto& l : hecke->labels()) {
            auto cls = hecke->class_elements(l);
            CHECK(k_min(*hecke, cls, KMinMode::InG) ==
                  std::get<CosetLabel>(l).lam.strip_ones().size());
        }
    }
}

TEST_CASE("connector level examples") {
    auto sym = Family::make(FamilyKind::CenterSym, 4);
    CHECK(m_value(*sym, sym->identity(), 1, 1) == 0);
    CHECK(m_value(*sym, GroupElement{Perm::parse_cycles("(1 2)", 4)}, 1, 1) == 2);

    auto hyp = Family::make(FamilyKind::CenterHyp, 2);
    for (const auto& x : hyp->enumerate_K()) {
        CHECK(m_value(*hyp, x, 2, 2) <= 2);
        CHECK(is_minimal(*hyp, x, 2, 2));
    }
}

TEST_CASE("minimality examples") {
    auto sym = Family::make(FamilyKind::CenterSym, 4);
    CHECK(is_minimal(*sym, sym->identity(), 1, 1));
    CHECK(!is_minimal(*sym, GroupElement{Perm::parse_cycles("(1 2)(3 4)", 4)}, 1, 1));

    auto hyp = Family::make(FamilyKind::CenterHyp, 4);
    GroupElement swap_blocks{Perm::parse_cycles("(1 5)(2 6)(3 7)(4 8)", 8)};
    CHECK(hyp->in_K(swap_blocks));
    CHECK(m_value(*hyp, swap_blocks, 2, 2) == 4);
    CHECK(is_minimal(*hyp, swap_blocks, 2, 2));
}

TEST_CASE("connector level is stable across levels") {
    auto sym = Family::make(FamilyKind::CenterSym, 4);
    auto big = Family::make(FamilyKind::CenterSym, 5);
    for (const auto& x : sym->enumerate_K())
        for (int k1 = 0; k1 <= 2; ++k1)
            for (int k2 = 0; k2 <= 2; ++k2)
                CHECK(m_value(*sym, x, k1, k2) ==
                      m_value(*big, sym->embed_to(x, *big), k1, k2));
}

TEST_CASE("axiom checkers pass at small scale") {
    for (auto h : {Hypothesis::H1, Hypothesis::H2, Hypothesis::H3, Hypothesis::H4,
                   Hypothesis::H5}) {
        CHECK(check_hypothesis(FamilyKind::CenterSym, h, 1, 3, 2).pass);
        CHECK(check_hypothesis(FamilyKind::CenterHyp, h, 1, 2, 2).pass);
    }
    CHECK(check_hypothesis(FamilyKind::Hecke, Hypothesis::H0, 1, 2, 0).pass);
    CHECK(check_hypothesis(FamilyKind::DiagPair, Hypothesis::H0, 2, 3, 0).pass);
    CHECK(check_hypothesis(FamilyKind::CenterSym, Hypothesis::Hp0, 1, 4, 0).pass);
}

TEST_CASE("the matrix tower fails the k1+k2 bound at the witness") {
    auto report = check_hypothesis(FamilyKind::GLCenter, Hypothesis::H4, 5, 5, 2, 2);
    CHECK(!report.pass);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->elements.size() == 1);
}

TEST_CASE("two-sided class data is consistent") {
    auto sym = Family::make(FamilyKind::CenterSym, 4);
    GroupElement t{Perm::parse_cycles("(1 2)", 4)};
    auto data = double_class_data(*sym, t, 2, 2);
    CHECK(data.m == 2);
    CHECK(data.intersection == double_class_chain_intersection(*sym, t, 2, 2, data.m));
    CHECK(data.size == static_cast<long long>(sym->double_class(t, 2, 2).size()));
}
