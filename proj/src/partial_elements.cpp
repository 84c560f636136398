#include "dcalg/partial_elements.hpp"

#include "dcalg/hypotheses.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace dcalg {

namespace {

// Enumerations of K_n and its fixed subgroups recur heavily; the instances are
// tiny where partial elements are used, so a per-call enumeration is fine, but
// the subgroup lists are worth caching per (family,n,k) within a call chain.
std::vector<GroupElement> subgroup_elements(const Family& fam, int k) {
    return fam.enumerate_K_sub(k);
}

}  // namespace

GroupElement left_coset_rep(const Family& fam, const GroupElement& t, int k) {
    GroupElement best = t;
    for (const auto& s : subgroup_elements(fam, k)) {
        GroupElement cand = fam.mul(t, s);
        if (cand < best) best = cand;
    }
    return best;
}

GroupElement right_coset_rep(const Family& fam, const GroupElement& t, int k) {
    GroupElement best = t;
    for (const auto& s : subgroup_elements(fam, k)) {
        GroupElement cand = fam.mul(s, t);
        if (cand < best) best = cand;
    }
    return best;
}

std::vector<GroupElement> left_coset_elements(const Family& fam, const GroupElement& rep, int k) {
    std::vector<GroupElement> out;
    for (const auto& s : subgroup_elements(fam, k)) out.push_back(fam.mul(rep, s));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GroupElement> right_coset_elements(const Family& fam, const GroupElement& rep, int k) {
    std::vector<GroupElement> out;
    for (const auto& s : subgroup_elements(fam, k)) out.push_back(fam.mul(s, rep));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GroupElement> all_left_coset_reps(const Family& fam, int k) {
    std::unordered_set<GroupElement, ElementHash> seen;
    std::vector<GroupElement> out;
    for (const auto& t : fam.enumerate_K()) {
        GroupElement rep = left_coset_rep(fam, t, k);
        if (seen.insert(rep).second) out.push_back(rep);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GroupElement> all_right_coset_reps(const Family& fam, int k) {
    std::unordered_set<GroupElement, ElementHash> seen;
    std::vector<GroupElement> out;
    for (const auto& t : fam.enumerate_K()) {
        GroupElement rep = right_coset_rep(fam, t, k);
        if (seen.insert(rep).second) out.push_back(rep);
    }
    std::sort(out.begin(), out.end());
    return out;
}

PartialElement make_partial_element(const Family& fam, const GroupElement& c, const GroupElement& x,
                                    int k, const GroupElement& cp) {
    if (k < 1 || k > fam.n()) throw std::invalid_argument("partial element: k out of range");
    if (fam.G_chain_level(x) > k)
        throw std::invalid_argument("partial element: middle not in the level-k chain member");
    PartialElement pe;
    pe.k = k;
    pe.left_rep = left_coset_rep(fam, c, k);
    pe.mid = x;
    pe.right_rep = right_coset_rep(fam, cp, k);
    return pe;
}

PartialElement act(const Family& fam, const GroupElement& a, const GroupElement& b,
                   const PartialElement& pe) {
    PartialElement out = pe;
    out.left_rep = left_coset_rep(fam, fam.mul(a, pe.left_rep), pe.k);
    out.right_rep = right_coset_rep(fam, fam.mul(pe.right_rep, fam.inv(b)), pe.k);
    return out;
}

PESum pe_product(const Family& fam, const PartialElement& pe1, const PartialElement& pe2) {
    const int k1 = pe1.k, k2 = pe2.k;
    GroupElement connector = fam.mul(pe1.right_rep, pe2.left_rep);
    auto D = fam.double_class(connector, k1, k2);
    int kD = fam.n();
    for (const auto& h : D) kD = std::min(kD, fam.K_chain_level(h));
    std::vector<GroupElement> minimal;
    for (const auto& h : D)
        if (fam.K_chain_level(h) <= kD) minimal.push_back(h);
    int m = std::max({k1, k2, kD});

    Int nk1 = fam.K_sub_order(k1) / fam.K_sub_order(m);
    Int nk2 = fam.K_sub_order(k2) / fam.K_sub_order(m);
    if (nk1 * fam.K_sub_order(m) != fam.K_sub_order(k1) ||
        nk2 * fam.K_sub_order(m) != fam.K_sub_order(k2))
        throw std::logic_error("subgroup index is not integral");
    Rational prefactor(1, nk1 * nk2 * Int(minimal.size()));

    // split C_1 into left cosets of K_n^m and C'_2 into right cosets
    std::unordered_set<GroupElement, ElementHash> seen_left, seen_right;
    std::vector<GroupElement> left_parts, right_parts;
    for (const auto& c : left_coset_elements(fam, pe1.left_rep, k1)) {
        GroupElement rep = left_coset_rep(fam, c, m);
        if (seen_left.insert(rep).second) left_parts.push_back(rep);
    }
    for (const auto& c : right_coset_elements(fam, pe2.right_rep, k2)) {
        GroupElement rep = right_coset_rep(fam, c, m);
        if (seen_right.insert(rep).second) right_parts.push_back(rep);
    }
    if (Int(left_parts.size()) != nk1 || Int(right_parts.size()) != nk2)
        throw std::logic_error("coset splitting has unexpected size");

    PESum out;
    for (const auto& h : minimal) {
        GroupElement mid = fam.mul(fam.mul(pe1.mid, h), pe2.mid);
        for (const auto& lc : left_parts)
            for (const auto& rc : right_parts) {
                PartialElement pe;
                pe.k = m;
                pe.left_rep = lc;
                pe.mid = mid;
                pe.right_rep = rc;
                out[pe] += prefactor;
            }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

PESum pe_product(const Family& fam, const PESum& s1, const PESum& s2) {
    PESum out;
    for (const auto& [pe1, c1] : s1)
        for (const auto& [pe2, c2] : s2) {
            Rational c = c1 * c2;
            for (const auto& [pe, v] : pe_product(fam, pe1, pe2)) {
                auto [it, inserted] = out.emplace(pe, c * v);
                if (!inserted) {
                    it->second += c * v;
                    if (it->second == 0) out.erase(it);
                }
            }
        }
    return out;
}

PESum a_element(const Family& fam, const GroupElement& x, int k) {
    if (fam.G_chain_level(x) > k)
        throw std::invalid_argument("a_element: middle not in the level-k chain member");
    PESum out;
    for (const auto& lc : all_left_coset_reps(fam, k))
        for (const auto& rc : all_right_coset_reps(fam, k)) {
            PartialElement pe;
            pe.k = k;
            pe.left_rep = lc;
            pe.mid = x;
            pe.right_rep = rc;
            out[pe] = 1;
        }
    return out;
}

Rational prop_f_coefficient(const Family& fam, const GroupElement& x1, int k1,
                            const GroupElement& x2, int k2, const GroupElement& x, int k) {
    GroupElement X = fam.mul(fam.mul(fam.inv(x1), x), fam.inv(x2));
    if (!fam.in_K(X)) return 0;
    int m = m_value(fam, X, k1, k2);
    if (fam.K_chain_level(X) > m) return 0;           // not a minimal connector
    if (k != std::max({k1, k2, m})) return 0;         // wrong level for this connector
    long long inter = double_class_chain_intersection(fam, X, k1, k2, m);
    return Rational(fam.K_order() * fam.K_order_at(fam.n() - k),
                    fam.K_order_at(fam.n() - k1) * fam.K_order_at(fam.n() - k2) * Int(inter));
}

FormalSum psi(const std::shared_ptr<const Family>& fam, const PartialElement& pe) {
    auto C = left_coset_elements(*fam, pe.left_rep, pe.k);
    auto Cp = right_coset_elements(*fam, pe.right_rep, pe.k);
    FormalSum out(fam);
    Rational w(1, Int(C.size()) * Int(Cp.size()));
    for (const auto& c : C)
        for (const auto& cp : Cp) out.add(fam->mul(fam->mul(c, pe.mid), cp), w);
    return out;
}

FormalSum psi(const std::shared_ptr<const Family>& fam, const PESum& s) {
    FormalSum out(fam);
    for (const auto& [pe, c] : s) out = out + psi(fam, pe).scaled(c);
    return out;
}

bool psi_compatible(const std::shared_ptr<const Family>& fam, const PartialElement& pe1,
                    const PartialElement& pe2) {
    FormalSum lhs = psi(fam, pe_product(*fam, pe1, pe2));
    FormalSum rhs = psi(fam, pe1) * psi(fam, pe2);
    return lhs == rhs;
}

std::map<std::pair<GroupElement, int>, Rational> regroup_as_a_elements(const Family& fam,
                                                                       const PESum& s) {
    std::map<std::pair<GroupElement, int>, Rational> out;
    std::map<std::pair<GroupElement, int>, long long> counts;
    for (const auto& [pe, c] : s) {
        auto key = std::make_pair(pe.mid, pe.k);
        auto [it, inserted] = out.emplace(key, c);
        if (!inserted && it->second != c)
            throw std::domain_error("sum is not uniform over coset pairs");
        ++counts[key];
    }
    for (const auto& [key, cnt] : counts) {
        Int index = fam.K_order() / fam.K_sub_order(key.second);
        if (Int(cnt) != index * index)
            throw std::domain_error("sum does not cover full coset-pair orbits");
    }
    return out;
}

std::vector<PartialElement> enumerate_partial_elements(const Family& fam) {
    std::vector<PartialElement> out;
    for (int k = 1; k <= fam.n(); ++k) {
        auto lefts = all_left_coset_reps(fam, k);
        auto rights = all_right_coset_reps(fam, k);
        for (const auto& x : fam.enumerate_G_chain(k))
            for (const auto& lc : lefts)
                for (const auto& rc : rights) {
                    PartialElement pe;
                    pe.k = k;
                    pe.left_rep = lc;
                    pe.mid = x;
                    pe.right_rep = rc;
                    out.push_back(std::move(pe));
                    if (static_cast<long long>(out.size()) > element_guard())
                        throw std::length_error("element guard exceeded enumerating partial elements");
                }
    }
    return out;
}

}  // namespace dcalg
