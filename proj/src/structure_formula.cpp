#include "dcalg/structure_formula.hpp"

#include "dcalg/hypotheses.hpp"

#include <algorithm>
#include <stdexcept>

namespace dcalg {

namespace {

int min_level_for(FamilyKind kind) { return kind == FamilyKind::DiagPair ? 2 : 1; }

struct SumSetup {
    int k1, k2, nstar;
    std::shared_ptr<const Family> ev;
    GroupElement a, b;  // chain-minimal operand representatives at the eval level
};

SumSetup prepare(const std::shared_ptr<const Family>& fam, const ClassLabel& l1,
                 const ClassLabel& l2) {
    if (fam->kind() == FamilyKind::GLCenter)
        throw std::invalid_argument("closed-form coefficients unsupported for the gl family");
    SumSetup s{};
    s.k1 = fam->k_of_class(fam->pad_label(fam->proper_label(l1)));
    s.k2 = fam->k_of_class(fam->pad_label(fam->proper_label(l2)));
    s.nstar = std::max(std::min(fam->n(), s.k1 + s.k2), min_level_for(fam->kind()));
    s.ev = Family::make(fam->kind(), s.nstar, fam->q());
    s.a = s.ev->representative(s.ev->pad_label(fam->proper_label(l1)));
    s.b = s.ev->representative(s.ev->pad_label(fam->proper_label(l2)));
    // the derivation needs operand representatives at their minimal chain level
    if (s.ev->G_chain_level(s.a) != s.k1 || s.ev->G_chain_level(s.b) != s.k2)
        throw std::logic_error("canonical representative is not chain-minimal");
    return s;
}

}  // namespace

std::map<ClassLabel, CoefficientBreakdown> theorem_decomposition(
    const std::shared_ptr<const Family>& fam, const ClassLabel& l1, const ClassLabel& l2) {
    const int n = fam->n();
    SumSetup s = prepare(fam, l1, l2);
    const bool center = fam->center_mode();

    std::map<ClassLabel, CoefficientBreakdown> bins;  // keyed by proper target label
    for (const auto& X : s.ev->enumerate_K()) {
        DoubleClassData data = double_class_data(*s.ev, X, s.k1, s.k2);
        if (s.ev->K_chain_level(X) > data.m) continue;  // summands need minimal connectors
        int k = std::max({s.k1, s.k2, data.m});
        if (k > std::min(s.k1 + s.k2, n)) continue;
        GroupElement x = s.ev->mul(s.ev->mul(s.a, X), s.b);
        ClassLabel target = s.ev->proper_label(
            center ? s.ev->label_of(s.ev->mul(s.ev->mul(s.ev->mul(x, s.b), s.ev->inv(x)), s.a))
                   : s.ev->label_of(x));
        BreakdownTerm term;
        term.k = k;
        term.m = data.m;
        term.x = x;
        term.intersection = data.intersection;
        term.contribution = Rational(1, fam->K_order_at(n - k) * Int(data.intersection));
        auto& bin = bins[target];
        bin.k1 = s.k1;
        bin.k2 = s.k2;
        bin.eval_level = s.nstar;
        bin.total += term.contribution;  // raw sum; scaled by the prefactor below
        bin.terms.push_back(std::move(term));
    }

    std::map<ClassLabel, CoefficientBreakdown> out;
    Rational common = Rational(fam->class_size(fam->pad_label(fam->proper_label(l1))) *
                                   fam->class_size(fam->pad_label(fam->proper_label(l2))) *
                                   fam->K_order_at(n - s.k1) * fam->K_order_at(n - s.k2),
                               fam->K_order());
    for (auto& [target, bin] : bins) {
        ClassLabel padded = fam->pad_label(target);
        bin.k3 = fam->k_of_class(padded);
        bin.prefactor = common / Rational(fam->class_size(padded));
        bin.total *= bin.prefactor;
        out.emplace(padded, std::move(bin));
    }
    return out;
}

CoefficientBreakdown coefficient_via_theorem(const std::shared_ptr<const Family>& fam,
                                             const ClassLabel& l1_in, const ClassLabel& l2_in,
                                             const ClassLabel& l3_in) {
    ClassLabel l3 = fam->pad_label(fam->proper_label(l3_in));
    auto all = theorem_decomposition(fam, l1_in, l2_in);
    auto it = all.find(l3);
    if (it != all.end()) return it->second;
    SumSetup s = prepare(fam, l1_in, l2_in);
    CoefficientBreakdown zero;
    zero.k1 = s.k1;
    zero.k2 = s.k2;
    zero.k3 = fam->k_of_class(l3);
    zero.eval_level = s.nstar;
    zero.prefactor = Rational(fam->class_size(fam->pad_label(fam->proper_label(l1_in))) *
                                  fam->class_size(fam->pad_label(fam->proper_label(l2_in))) *
                                  fam->K_order_at(fam->n() - s.k1) *
                                  fam->K_order_at(fam->n() - s.k2),
                              fam->K_order() * fam->class_size(l3));
    zero.total = 0;
    return zero;
}

CoefficientBreakdown coefficient_via_theorem(const std::shared_ptr<const Family>& fam,
                                             const GroupElement& x1, const GroupElement& x2,
                                             const GroupElement& x3) {
    return coefficient_via_theorem(fam, fam->label_of(x1), fam->label_of(x2), fam->label_of(x3));
}

CoefficientBreakdown center_coefficient_via_theorem(const std::shared_ptr<const Family>& fam,
                                                    const GroupElement& f, const GroupElement& h,
                                                    const GroupElement& g) {
    if (!fam->center_mode())
        throw std::invalid_argument("center coefficient requires a center family");
    return coefficient_via_theorem(fam, fam->label_of(f), fam->label_of(h), fam->label_of(g));
}

}  // namespace dcalg
