#include "dcalg/family.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace dcalg {

namespace {
std::atomic<long long> g_element_guard{10'000'000};
}

long long element_guard() { return g_element_guard.load(); }
void set_element_guard(long long guard) { g_element_guard.store(guard); }

Partition coset_type(const Perm& w) {
    int deg = w.degree();
    if (deg % 2) throw std::invalid_argument("coset_type needs even degree");
    int n = deg / 2;
    std::vector<int> parent(deg);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto join = [&](int a, int b) { parent[find(a)] = find(b); };
    for (int i = 0; i < n; ++i) {
        join(2 * i, 2 * i + 1);
        join(w.apply(2 * i), w.apply(2 * i + 1));
    }
    std::vector<int> count(deg, 0);
    for (int p = 0; p < deg; ++p) ++count[find(p)];
    std::vector<int> halves;
    for (int p = 0; p < deg; ++p)
        if (count[p]) halves.push_back(count[p] / 2);
    return Partition(std::move(halves));
}

bool preserves_pairs(const Perm& w) {
    if (w.degree() % 2) return false;
    for (int i = 0; 2 * i < w.degree(); ++i) {
        int a = w.apply(2 * i), b = w.apply(2 * i + 1);
        if ((a ^ 1) != b) return false;
    }
    return true;
}

PairPartition bn_type(const Perm& w) {
    if (!preserves_pairs(w)) throw std::invalid_argument("bn_type needs a pair-preserving permutation");
    auto cycles = w.cycles();
    std::vector<char> used(cycles.size(), 0);
    std::vector<int> min_to_cycle(w.degree(), -1);
    for (size_t c = 0; c < cycles.size(); ++c)
        for (int p : cycles[c]) min_to_cycle[p] = static_cast<int>(c);
    std::vector<int> lam, del;
    for (size_t c = 0; c < cycles.size(); ++c) {
        if (used[c]) continue;
        used[c] = 1;
        int partner = min_to_cycle[cycles[c][0] ^ 1];
        if (partner == static_cast<int>(c)) {
            del.push_back(static_cast<int>(cycles[c].size()) / 2);
        } else {
            used[partner] = 1;
            lam.push_back(static_cast<int>(cycles[c].size()));
        }
    }
    return PairPartition{Partition(std::move(lam)), Partition(std::move(del))};
}

IndexedPair sn1_class(const Perm& w) {
    auto cycles = w.cycles();
    IndexedPair out;
    std::vector<int> rest;
    for (const auto& c : cycles) {
        if (c.front() == 0)
            out.i = static_cast<int>(c.size());
        else
            rest.push_back(static_cast<int>(c.size()));
    }
    out.lambda = Partition(std::move(rest));
    return out;
}

std::string family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::CenterSym: return "center-sym";
        case FamilyKind::CenterHyp: return "center-hyp";
        case FamilyKind::Hecke: return "hecke";
        case FamilyKind::DiagPair: return "diag-pair";
        case FamilyKind::GLCenter: return "gl";
    }
    throw std::logic_error("unreachable");
}

FamilyKind family_from_name(const std::string& name) {
    if (name == "center-sym") return FamilyKind::CenterSym;
    if (name == "center-hyp") return FamilyKind::CenterHyp;
    if (name == "hecke") return FamilyKind::Hecke;
    if (name == "diag-pair") return FamilyKind::DiagPair;
    if (name == "gl") return FamilyKind::GLCenter;
    throw std::invalid_argument("unknown family: " + name);
}

namespace {

void guarded_push(std::vector<GroupElement>& out) {
    if (static_cast<long long>(out.size()) > element_guard())
        throw std::length_error("element guard exceeded during orbit enumeration");
}

// Orbit closure under a move set, deterministic sorted result.
template <typename MoveFn>
std::vector<GroupElement> orbit_closure(const GroupElement& start, MoveFn&& moves) {
    std::unordered_set<GroupElement, ElementHash> seen{start};
    std::deque<GroupElement> frontier{start};
    std::vector<GroupElement> out{start};
    while (!frontier.empty()) {
        GroupElement cur = frontier.front();
        frontier.pop_front();
        for (GroupElement next : moves(cur)) {
            if (seen.insert(next).second) {
                frontier.push_back(next);
                out.push_back(std::move(next));
                guarded_push(out);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<GroupElement> Family::class_elements(const ClassLabel& l) const {
    GroupElement rep = representative(l);
    auto gens = K_generators();
    if (center_mode()) {
        return orbit_closure(rep, [&](const GroupElement& g) {
            std::vector<GroupElement> next;
            next.reserve(gens.size());
            for (const auto& s : gens) next.push_back(mul(mul(s, g), inv(s)));
            return next;
        });
    }
    return orbit_closure(rep, [&](const GroupElement& g) {
        std::vector<GroupElement> next;
        next.reserve(2 * gens.size());
        for (const auto& s : gens) {
            next.push_back(mul(s, g));
            next.push_back(mul(g, s));
        }
        return next;
    });
}

std::vector<GroupElement> Family::double_class(const GroupElement& X, int k1, int k2) const {
    auto left = K_sub_generators(k1);
    auto right = K_sub_generators(k2);
    return orbit_closure(X, [&](const GroupElement& g) {
        std::vector<GroupElement> next;
        next.reserve(left.size() + right.size());
        for (const auto& s : left) next.push_back(mul(s, g));
        for (const auto& t : right) next.push_back(mul(g, t));
        return next;
    });
}

std::vector<GroupElement> Family::enumerate_K_sub(int k) const {
    GroupElement id = identity();
    auto gens = K_sub_generators(k);
    return orbit_closure(id, [&](const GroupElement& g) {
        std::vector<GroupElement> next;
        next.reserve(gens.size());
        for (const auto& s : gens) next.push_back(mul(g, s));
        return next;
    });
}

bool Family::in_class(const GroupElement& a, const ClassLabel& l) const {
    return label_of(a) == l;
}

}  // namespace dcalg
