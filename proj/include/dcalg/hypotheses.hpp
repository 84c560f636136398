#pragma once

#include "dcalg/family.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dcalg {

enum class Hypothesis { H0, H1, H2, H3, Hp3, H4, H5, Hp0 };

std::string hypothesis_name(Hypothesis h);
Hypothesis hypothesis_from_name(const std::string& name);

enum class KMinMode { InK, InG };

// min k with X ∩ K_k (resp. X ∩ G_k) nonempty; the chain starts at the
// trivial group K_0.
int k_min(const Family& fam, const std::vector<GroupElement>& X, KMinMode mode);

// m_{k1,k2}(x) = k(K_n^{k1} x K_n^{k2}); independent of n once the tower is
// stable, which the checkers verify separately.
int m_value(const Family& fam, const GroupElement& x, int k1, int k2);

bool is_minimal(const Family& fam, const GroupElement& y, int k1, int k2);

// Size of K_n^{k1} x K_n^{k2} ∩ K_m.
long long double_class_chain_intersection(const Family& fam, const GroupElement& x, int k1,
                                          int k2, int m);

struct DoubleClassData {
    int m = 0;                  // chain entry level of the two-sided class
    long long intersection = 0; // elements at that level
    long long size = 0;         // full class size
};

// One orbit walk yielding the entry level and its intersection count.
DoubleClassData double_class_data(const Family& fam, const GroupElement& x, int k1, int k2);

struct HypothesisWitness {
    std::string description;
    std::vector<std::string> elements;
};

struct HypothesisReport {
    Hypothesis hypothesis;
    FamilyKind family;
    int q = 0;
    std::vector<std::pair<int, int>> checked;  // (n, k) cells
    bool pass = true;
    std::optional<HypothesisWitness> witness;
};

// Exhaustive verification over n in [n_lo, n_hi], subgroup indices up to k_max.
HypothesisReport check_hypothesis(FamilyKind kind, Hypothesis which, int n_lo, int n_hi,
                                  int k_max, int q = 0);

std::vector<HypothesisReport> check_all_hypotheses(FamilyKind kind, int n_hi, int k_max,
                                                   int q = 0);

}  // namespace dcalg
