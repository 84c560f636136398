#include "dcalg/polynomiality.hpp"

#include "dcalg/formal_sum.hpp"

#include <doctest.h>

using namespace dcalg;

namespace {

ClassLabel ct(const char* s) { return CTLabel{Partition::parse(s)}; }
ClassLabel coset(const char* s) { return CosetLabel{Partition::parse(s)}; }

}  // namespace

TEST_CASE("exact interpolation") {
    auto poly = RationalPolynomial::interpolate({{4, 12}, {5, 20}, {6, 30}});
    CHECK(poly == RationalPolynomial(std::vector<Rational>{0, -1, 1}));  // n^2 - n
    CHECK(RationalPolynomial::interpolate({{4, 3}, {5, 3}}) ==
          RationalPolynomial(std::vector<Rational>{3}));
    CHECK(RationalPolynomial::interpolate({{0, 0}, {1, 1}}) ==
          RationalPolynomial(std::vector<Rational>{0, 1}));
    CHECK_THROWS(RationalPolynomial::interpolate({{1, 1}, {1, 2}}));
    CHECK(RationalPolynomial::interpolate({{3, 0}, {7, 0}}).degree() == -1);
    CHECK(RationalPolynomial::interpolate({{2, 5}, {3, 7}, {4, 9}}).eval(10) == 21);
}

TEST_CASE("coefficient series across levels") {
    auto s1 = coefficient_series(FamilyKind::CenterSym, ct("2"), ct("2"), ct(""), 4, 6);
    CHECK(s1 == std::vector<std::pair<int, Rational>>{{4, 6}, {5, 10}, {6, 15}});
    auto s2 = coefficient_series(FamilyKind::CenterSym, ct("2"), ct("2"), ct("3"), 4, 6);
    CHECK(s2 == std::vector<std::pair<int, Rational>>{{4, 3}, {5, 3}, {6, 3}});
    auto s3 = coefficient_series(FamilyKind::Hecke, coset("2"), coset("2"), coset("2,2"), 4, 5);
    for (const auto& [n, v] : s3)
        CHECK(normalized_value(FamilyKind::Hecke, coset("2"), coset("2"), coset("2,2"), n, v) == 2);
}

TEST_CASE("normalizations") {
    CHECK(normalized_value(FamilyKind::Hecke, coset("2"), coset("2"), coset(""), 4,
                           Rational(4608)) == 12);
    CHECK(normalized_value(FamilyKind::CenterSym, ct("2"), ct("2"), ct(""), 7, Rational(21)) == 21);
    // diagonal pair: raw value computed by brute force, normalization frozen
    ClassLabel ident = IPairLabel{{1, Partition{}}};
    auto fam = Family::make(FamilyKind::DiagPair, 3);
    Rational raw = structure_coefficient_bruteforce(fam, fam->pad_label(ident),
                                                    fam->pad_label(ident), fam->pad_label(ident));
    CHECK(raw == 2);
    CHECK(normalized_value(FamilyKind::DiagPair, ident, ident, ident, 3, raw) == 4);
}

TEST_CASE("series sources agree where both apply") {
    auto brute = coefficient_series(FamilyKind::Hecke, coset("2"), coset("2"), coset("3"), 4, 5,
                                    SeriesSource::BruteForce);
    auto closed = coefficient_series(FamilyKind::Hecke, coset("2"), coset("2"), coset("3"), 4, 5,
                                     SeriesSource::Theorem);
    CHECK(brute == closed);
}

TEST_CASE("certificates reproduce the displayed polynomials") {
    auto cert = verify_polynomiality(FamilyKind::CenterSym, ct("2"), ct("2"), ct(""), 4, 4, 8, 9,
                                     9);
    CHECK(cert.pass);
    CHECK(cert.poly == RationalPolynomial(std::vector<Rational>{0, Rational(-1, 2), Rational(1, 2)}));

    auto hecke3 = verify_polynomiality_auto(FamilyKind::Hecke, coset("2"), coset("2"), coset("3"),
                                            1);
    CHECK(hecke3.pass);
    CHECK(hecke3.poly == RationalPolynomial(std::vector<Rational>{3}));
}

TEST_CASE("hyperoctahedral center certificate at small proper pairs") {
    ClassLabel one = BTypeLabel{{Partition{}, Partition::parse("1")}};
    ClassLabel target = BTypeLabel{{Partition::parse("2"), Partition{}}};
    auto cert = verify_polynomiality_auto(FamilyKind::CenterHyp, one, one, target, 2);
    CHECK(cert.pass);
    CHECK(cert.poly.degree() <=
          corollary_degree_bound(FamilyKind::CenterHyp, one, one, target));
}

TEST_CASE("degree bounds") {
    CHECK(corollary_degree_bound(FamilyKind::CenterSym, ct("2"), ct("2"), ct("")) == 4);
    CHECK(corollary_degree_bound(FamilyKind::Hecke, coset("2,2"), coset("2"), coset("3")) == 3);
    ClassLabel a = BTypeLabel{{Partition::parse("2"), Partition::parse("1")}};
    ClassLabel b = BTypeLabel{{Partition{}, Partition::parse("1")}};
    CHECK(corollary_degree_bound(FamilyKind::CenterHyp, a, b, b) == 3);
    ClassLabel p = IPairLabel{{2, Partition::parse("2")}};
    ClassLabel r = IPairLabel{{1, Partition{}}};
    CHECK(corollary_degree_bound(FamilyKind::DiagPair, p, p, r) == 8);
}

TEST_CASE("failed holdout is reported") {
    // fitting a quadratic series with a linear-only fit range must fail
    auto cert = verify_polynomiality(FamilyKind::CenterSym, ct("2"), ct("2"), ct(""), 4, 4, 5, 6,
                                     7);
    CHECK(!cert.pass);
    CHECK(!cert.note.empty());
}
