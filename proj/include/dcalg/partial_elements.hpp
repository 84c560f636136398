#pragma once

#include "dcalg/formal_sum.hpp"

#include <map>
#include <utility>
#include <vector>

namespace dcalg {

// Triple (C, (x;k), C') where C is a left coset t K_n^k, C' a right coset
// K_n^k t, and x lies in the level-k member of the ambient chain. Cosets are
// stored by their least element.
struct PartialElement {
    int k = 0;
    GroupElement left_rep;   // canonical representative of C = t K_n^k
    GroupElement mid;        // x, embedded in the ambient group
    GroupElement right_rep;  // canonical representative of C' = K_n^k t

    auto operator<=>(const PartialElement&) const = default;
};

using PESum = std::map<PartialElement, Rational>;

// Canonicalization of coset representatives.
GroupElement left_coset_rep(const Family& fam, const GroupElement& t, int k);
GroupElement right_coset_rep(const Family& fam, const GroupElement& t, int k);
std::vector<GroupElement> left_coset_elements(const Family& fam, const GroupElement& rep, int k);
std::vector<GroupElement> right_coset_elements(const Family& fam, const GroupElement& rep, int k);
std::vector<GroupElement> all_left_coset_reps(const Family& fam, int k);
std::vector<GroupElement> all_right_coset_reps(const Family& fam, int k);

PartialElement make_partial_element(const Family& fam, const GroupElement& c, const GroupElement& x,
                                    int k, const GroupElement& cp);

// The two-sided translation action (a,b) . (C,(x;k),C') = (aC, (x;k), C'b^{-1}).
PartialElement act(const Family& fam, const GroupElement& a, const GroupElement& b,
                   const PartialElement& pe);

// Product of two partial elements: a sum over the minimal connectors of
// C'_1 C_2 and the splittings of C_1 and C'_2 into level-m cosets.
PESum pe_product(const Family& fam, const PartialElement& pe1, const PartialElement& pe2);

PESum pe_product(const Family& fam, const PESum& s1, const PESum& s2);  // bilinear extension

// Invariant generator: sum of (C,(x;k),C') over all coset pairs, coefficient 1.
PESum a_element(const Family& fam, const GroupElement& x, int k);

// Closed form for the coefficient of a_{(x;k)} in a_{(x1;k1)} a_{(x2;k2)}.
Rational prop_f_coefficient(const Family& fam, const GroupElement& x1, int k1,
                            const GroupElement& x2, int k2, const GroupElement& x, int k);

// Averaging map into the ambient group algebra.
FormalSum psi(const std::shared_ptr<const Family>& fam, const PartialElement& pe);
FormalSum psi(const std::shared_ptr<const Family>& fam, const PESum& s);

bool psi_compatible(const std::shared_ptr<const Family>& fam, const PartialElement& pe1,
                    const PartialElement& pe2);

// Coefficients of a PESum written in the a_{(x;k)} family; throws when the sum
// is not translation-invariant.
std::map<std::pair<GroupElement, int>, Rational> regroup_as_a_elements(const Family& fam,
                                                                       const PESum& s);

// All partial elements of the instance (guarded; grows fast).
std::vector<PartialElement> enumerate_partial_elements(const Family& fam);

}  // namespace dcalg
