#pragma once

#include "dcalg/element.hpp"
#include "dcalg/partition.hpp"

#include <compare>
#include <string>
#include <variant>

namespace dcalg {

// Conjugacy-class / double-class labels for the five concrete families.
struct CTLabel {          // cycle type, partition of n
    Partition lam;
    auto operator<=>(const CTLabel&) const = default;
};
struct CosetLabel {       // coset type, partition of n (ambient degree 2n)
    Partition lam;
    auto operator<=>(const CosetLabel&) const = default;
};
struct BTypeLabel {       // paired/self-paired cycle data, |lam| + |delta| = n
    PairPartition type;
    auto operator<=>(const BTypeLabel&) const = default;
};
struct IPairLabel {       // (i, lambda) with |lambda| = n - i
    IndexedPair ip;
    auto operator<=>(const IPairLabel&) const = default;
};
struct MatRepLabel {      // canonical (least) conjugacy representative
    FqMat rep;
    auto operator<=>(const MatRepLabel&) const = default;
};

using ClassLabel = std::variant<CTLabel, CosetLabel, BTypeLabel, IPairLabel, MatRepLabel>;

std::string label_str(const ClassLabel& l);          // "ct:2,1,1", "coset:2,1", ...
ClassLabel parse_label(const std::string& text);     // inverse of label_str (glrep needs q,n)
ClassLabel parse_label(const std::string& text, int q, int n);

}  // namespace dcalg
