#pragma once

#include "dcalg/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace dcalg {

// Integer partition: weakly decreasing positive parts.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    int multiplicity(int part) const;
    bool empty() const { return parts_.empty(); }
    bool is_proper() const;  // no part equal to 1

    Int z() const;  // prod_i i^{m_i} m_i!

    Partition unite(const Partition& other) const;  // multiset union
    Partition strip_ones() const;
    Partition pad_to(int n) const;   // union with (1^{n-size}); requires n >= size
    Partition doubled() const;       // each part doubled

    std::string str() const;  // "3,2,2"; empty partition prints as "∅", parses from "", "0" or "∅"

    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
};

// All partitions of n, lexicographically decreasing-first deterministic order.
std::vector<Partition> partitions_of(int n);

// All proper partitions of size <= n.
std::vector<Partition> proper_partitions_up_to(int n);

// Pair of partitions (lambda, delta); "proper" when lambda is proper.
struct PairPartition {
    Partition lambda;
    Partition delta;

    bool is_proper() const { return lambda.is_proper(); }
    int size() const { return lambda.size() + delta.size(); }
    // (lambda u (1^{n-size}), delta); requires n >= size
    PairPartition uparrow(int n) const;
    std::string str() const;  // "3,2|1,1"
    static PairPartition parse(const std::string& text);

    auto operator<=>(const PairPartition&) const = default;
};

// (i, lambda): used for classes relative to a point-stabilizer chain.
struct IndexedPair {
    int i = 1;
    Partition lambda;

    bool is_proper() const { return lambda.is_proper(); }
    std::string str() const;  // "2:(1,1)"
    static IndexedPair parse(const std::string& text);

    auto operator<=>(const IndexedPair&) const = default;
};

}  // namespace dcalg
