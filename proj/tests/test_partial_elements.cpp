#include "dcalg/partial_elements.hpp"

#include "dcalg/hypotheses.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace dcalg;

namespace {

// ---------------------------------------------------------------------------
// Independent oracle for the triple product over the pair-preserving tower at
// n = 2: everything below is raw set arithmetic on explicitly filtered
// permutation sets, with no use of the library's coset or orbit machinery.

using PSet = std::set<Perm>;

PSet oracle_B2() {
    PSet out;
    for (const auto& w : symmetric_group(4)) {
        bool ok = true;
        for (int i = 0; i < 2; ++i)
            if (w.apply(2 * i) / 2 != w.apply(2 * i + 1) / 2) ok = false;
        if (ok) out.insert(w);
    }
    return out;
}

PSet oracle_subgroup(int k) {  // elements fixing the first 2k points
    PSet out;
    for (const auto& w : oracle_B2()) {
        bool ok = true;
        for (int p = 0; p < 2 * k; ++p)
            if (w.apply(p) != p) ok = false;
        if (ok) out.insert(w);
    }
    return out;
}

PSet oracle_set_product(const PSet& A, const PSet& B) {
    PSet out;
    for (const auto& a : A)
        for (const auto& b : B) out.insert(a.compose(b));
    return out;
}

int oracle_level(const Perm& w) { return (w.max_moved() + 1) / 2; }

int oracle_kmin(const PSet& X) {
    int best = 99;
    for (const auto& w : X) best = std::min(best, oracle_level(w));
    return best;
}

struct OracleTriple {
    PSet C;
    Perm mid;
    int k;
    PSet Cp;
    bool operator<(const OracleTriple& o) const {
        return std::tie(k, C, mid, Cp) < std::tie(o.k, o.C, o.mid, o.Cp);
    }
    bool operator==(const OracleTriple& o) const {
        return std::tie(k, C, mid, Cp) == std::tie(o.k, o.C, o.mid, o.Cp);
    }
};

// literal expansion of the product definition
std::map<OracleTriple, Rational> oracle_product(const PSet& C1, const Perm& x1, int k1,
                                                const PSet& C1p, const PSet& C2, const Perm& x2,
                                                int k2, const PSet& C2p) {
    PSet D = oracle_set_product(C1p, C2);
    int kD = oracle_kmin(D);
    PSet minimal;
    for (const auto& h : D)
        if (oracle_level(h) <= kD) minimal.insert(h);
    int m = std::max({k1, k2, kD});
    PSet Km = oracle_subgroup(m);

    // split C1 into left cosets t Km and C2p into right cosets Km t
    std::set<PSet> left_parts, right_parts;
    for (const auto& c : C1) left_parts.insert(oracle_set_product({c}, Km));
    for (const auto& c : C2p) right_parts.insert(oracle_set_product(Km, {c}));

    Rational pref(1, Int(oracle_subgroup(k1).size() / Km.size()) *
                         Int(oracle_subgroup(k2).size() / Km.size()) * Int(minimal.size()));
    std::map<OracleTriple, Rational> out;
    for (const auto& h : minimal)
        for (const auto& L : left_parts)
            for (const auto& R : right_parts)
                out[OracleTriple{L, x1.compose(h).compose(x2), m, R}] += pref;
    return out;
}

OracleTriple to_oracle(const Family& fam, const PartialElement& pe) {
    OracleTriple t;
    t.k = pe.k;
    t.mid = std::get<Perm>(pe.mid);
    for (const auto& g : left_coset_elements(fam, pe.left_rep, pe.k))
        t.C.insert(std::get<Perm>(g));
    for (const auto& g : right_coset_elements(fam, pe.right_rep, pe.k))
        t.Cp.insert(std::get<Perm>(g));
    return t;
}

}  // namespace

TEST_CASE("triple product matches the raw set-arithmetic expansion") {
    auto fam = Family::make(FamilyKind::Hecke, 2);
    // golden fixture case: both factors are the identity-coset triple at k = 1
    PartialElement pe = make_partial_element(*fam, fam->identity(),
                                             fam->identity(), 1, fam->identity());
    PSet K1 = oracle_subgroup(1);
    auto expected = oracle_product(K1, Perm::identity(4), 1, K1, K1, Perm::identity(4), 1, K1);

    auto got_raw = pe_product(*fam, pe, pe);
    std::map<OracleTriple, Rational> got;
    for (const auto& [p, c] : got_raw) got[to_oracle(*fam, p)] += c;
    CHECK(got == expected);

    // identity middles leave identity-middle terms at level m = k
    bool found_identity_mid = false;
    for (const auto& [p, c] : got_raw)
        if (std::get<Perm>(p.mid).is_identity() && p.k == 1) found_identity_mid = true;
    CHECK(found_identity_mid);

    // a scattering of non-identity factors, same oracle
    auto lefts = all_left_coset_reps(*fam, 1);
    auto rights = all_right_coset_reps(*fam, 1);
    auto mids = fam->enumerate_G_chain(1);
    int compared = 0;
    for (const auto& l1 : lefts)
        for (const auto& r1 : rights)
            for (const auto& m1 : mids) {
                PartialElement a = make_partial_element(*fam, l1, m1, 1, r1);
                PartialElement b = make_partial_element(*fam, rights[1], mids[1], 1, lefts[1]);
                auto want = oracle_product(to_oracle(*fam, a).C, std::get<Perm>(m1), 1,
                                           to_oracle(*fam, a).Cp, to_oracle(*fam, b).C,
                                           std::get<Perm>(mids[1]), 1, to_oracle(*fam, b).Cp);
                std::map<OracleTriple, Rational> have;
                for (const auto& [p, c] : pe_product(*fam, a, b)) have[to_oracle(*fam, p)] += c;
                CHECK(have == want);
                ++compared;
            }
    CHECK(compared == 32);
}

TEST_CASE("generator supports") {
    auto hecke = Family::make(FamilyKind::Hecke, 2);
    CHECK(a_element(*hecke, hecke->identity(), 1).size() == 16);
    CHECK(a_element(*hecke, hecke->identity(), 2).size() == 64);

    auto sym = Family::make(FamilyKind::CenterSym, 3);
    CHECK(a_element(*sym, sym->identity(), 3).size() == 36);
}

TEST_CASE("partial element counting identity") {
    for (int n : {1, 2}) {
        auto fam = Family::make(FamilyKind::Hecke, n);
        Int expected = 0;
        for (int k = 1; k <= n; ++k) {
            Int index = fam->K_order() / fam->K_sub_order(k);
            expected += index * index * factorial(2 * k);
        }
        CHECK(Int(enumerate_partial_elements(*fam).size()) == expected);
    }
    for (int n : {2, 3}) {
        auto fam = Family::make(FamilyKind::CenterSym, n);
        Int expected = 0;
        for (int k = 1; k <= n; ++k) {
            Int index = fam->K_order() / fam->K_sub_order(k);
            expected += index * index * factorial(k);
        }
        CHECK(Int(enumerate_partial_elements(*fam).size()) == expected);
    }
}

TEST_CASE("closed-form expansion coefficients") {
    auto fam = Family::make(FamilyKind::Hecke, 2);
    GroupElement e = fam->identity();
    // identity factors at equal k: |K_n| / |K_{n-k}|
    CHECK(prop_f_coefficient(*fam, e, 1, e, 1, e, 1) == Rational(8, 2));
    CHECK(prop_f_coefficient(*fam, e, 2, e, 2, e, 2) == Rational(8, 1));
    // connector outside the subgroup tower
    GroupElement bad{Perm::parse_cycles("(2 3)", 4)};
    CHECK(prop_f_coefficient(*fam, e, 1, e, 1, bad, 1) == 0);
    // non-minimal connector
    auto sym = Family::make(FamilyKind::CenterSym, 4);
    GroupElement x{Perm::parse_cycles("(1 2)(3 4)", 4)};
    CHECK(prop_f_coefficient(*sym, sym->identity(), 1, sym->identity(), 1, x, 4) == 0);
}

TEST_CASE("averaging the invariant generator recovers the class sum") {
    auto fam = Family::make(FamilyKind::Hecke, 2);
    for (int k : {1, 2}) {
        for (const auto& x : fam->enumerate_G_chain(k)) {
            FormalSum lhs = psi(fam, a_element(*fam, x, k));
            ClassLabel cls = fam->label_of(x);
            Rational scale(fam->K_order() * fam->K_order(),
                           Int(fam->class_size(cls)) * fam->K_sub_order(k) * fam->K_sub_order(k));
            CHECK(lhs == class_sum(fam, cls).scaled(scale));
        }
    }
}

TEST_CASE("averaging a full-level triple is a single element") {
    auto fam = Family::make(FamilyKind::CenterSym, 3);
    GroupElement x{Perm::parse_cycles("(1 3 2)", 3)};
    GroupElement c{Perm::parse_cycles("(1 2)", 3)};
    PartialElement pe = make_partial_element(*fam, c, x, 3, c);
    FormalSum image = psi(fam, pe);
    REQUIRE(image.support_size() == 1);
    CHECK(image.coefficient(fam->mul(fam->mul(c, x), c)) == 1);
}

TEST_CASE("averaging map respects products on samples") {
    auto fam = Family::make(FamilyKind::Hecke, 2);
    auto pes = enumerate_partial_elements(*fam);
    for (size_t i = 0; i < pes.size(); i += 97)
        for (size_t j = 0; j < pes.size(); j += 131)
            CHECK(psi_compatible(fam, pes[i], pes[j]));
}

TEST_CASE("product associativity defects are recorded, not asserted") {
    auto fam = Family::make(FamilyKind::Hecke, 2);
    auto pes = enumerate_partial_elements(*fam);
    int defects = 0, checked = 0;
    for (size_t i = 0; i < pes.size(); i += 211)
        for (size_t j = 0; j < pes.size(); j += 223)
            for (size_t l = 0; l < pes.size(); l += 227) {
                PESum left = pe_product(*fam, pe_product(*fam, pes[i], pes[j]),
                                        PESum{{pes[l], 1}});
                PESum right = pe_product(*fam, PESum{{pes[i], 1}},
                                         pe_product(*fam, pes[j], pes[l]));
                ++checked;
                if (!(left == right)) ++defects;
            }
    MESSAGE("associativity defects: ", defects, " of ", checked, " sampled triples");
    CHECK(checked > 0);
}
