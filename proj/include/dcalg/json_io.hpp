#pragma once

#include "dcalg/hypotheses.hpp"
#include "dcalg/polynomiality.hpp"
#include "dcalg/structure_formula.hpp"

#include <map>
#include <string>

namespace dcalg {

// Rationals are serialized as decimal strings {"num","den"} to keep arbitrary
// precision intact; CSV uses "num/den" text.

std::string decomposition_json(const Family& fam, const ClassLabel& l1, const ClassLabel& l2,
                               const std::map<ClassLabel, Rational>& coefficients);
std::string decomposition_csv(const Family& fam, const ClassLabel& l1, const ClassLabel& l2,
                              const std::map<ClassLabel, Rational>& coefficients);

std::string hypothesis_report_json(const std::vector<HypothesisReport>& reports);

std::string breakdown_json(const Family& fam, const ClassLabel& l1, const ClassLabel& l2,
                           const ClassLabel& l3, const CoefficientBreakdown& bd,
                           const Rational* brute = nullptr);

std::string certificate_json(const PolyCertificate& cert);

}  // namespace dcalg
