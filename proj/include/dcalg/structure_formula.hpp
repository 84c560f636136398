#pragma once

#include "dcalg/family.hpp"

#include <map>
#include <vector>

namespace dcalg {

struct BreakdownTerm {
    int k = 0;                 // level of the term: max(k1, k2, m)
    int m = 0;                 // chain entry level of the two-sided class of X
    GroupElement x;            // the summand element, at the evaluation level
    long long intersection = 0;
    Rational contribution;     // 1 / (|K_{n-k}| * intersection)
};

struct CoefficientBreakdown {
    Rational total;
    Rational prefactor;
    int k1 = 0, k2 = 0, k3 = 0;
    int eval_level = 0;        // tower level the summation ran at
    std::vector<BreakdownTerm> terms;
};

// Closed-form structure coefficient of l3 in the product of the class sums of
// l1 and l2. Handles the two genuine pair families and both centers; the
// invertible-matrix family is rejected (its tower has no k1+k2 bound).
CoefficientBreakdown coefficient_via_theorem(const std::shared_ptr<const Family>& fam,
                                             const ClassLabel& l1, const ClassLabel& l2,
                                             const ClassLabel& l3);

// Whole-product evaluation: one summation pass, terms binned by target class.
// Targets with zero coefficient are absent from the map.
std::map<ClassLabel, CoefficientBreakdown> theorem_decomposition(
    const std::shared_ptr<const Family>& fam, const ClassLabel& l1, const ClassLabel& l2);

// Element-based entry points matching the two theorem statements.
CoefficientBreakdown coefficient_via_theorem(const std::shared_ptr<const Family>& fam,
                                             const GroupElement& x1, const GroupElement& x2,
                                             const GroupElement& x3);
CoefficientBreakdown center_coefficient_via_theorem(const std::shared_ptr<const Family>& fam,
                                                    const GroupElement& f, const GroupElement& h,
                                                    const GroupElement& g);

}  // namespace dcalg
