#pragma once

#include "dcalg/fq.hpp"
#include "dcalg/perm.hpp"

#include <compare>
#include <string>
#include <variant>

namespace dcalg {

// Element of a direct product G x H^opp: multiplication composes the first
// coordinates and anti-composes the second.
struct PermPair {
    Perm a;  // in S_n
    Perm b;  // in the opposite copy (stored as a plain permutation of degree n)

    auto operator<=>(const PermPair&) const = default;
    size_t hash() const { return a.hash() * 1000003u ^ b.hash(); }
    std::string str() const { return a.str() + ";" + b.str(); }
};

using GroupElement = std::variant<Perm, PermPair, FqMat>;

inline size_t element_hash(const GroupElement& g) {
    return std::visit([](const auto& v) { return v.hash(); }, g);
}

struct ElementHash {
    size_t operator()(const GroupElement& g) const { return element_hash(g); }
};

std::string element_str(const GroupElement& g);

}  // namespace dcalg
