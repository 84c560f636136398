#pragma once

#include "dcalg/partition.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace dcalg {

enum class EmbedMode { FixTop, FixBottom };

// Permutation of {1..degree} in one-line notation; images are 0-based internally.
class Perm {
  public:
    Perm() = default;
    explicit Perm(std::vector<int> images_zero_based);

    static Perm identity(int degree);
    // Cycle notation on 1-based points, fixed points omissible: "(1 2)(3 4)".
    static Perm parse_cycles(const std::string& text, int degree);

    int degree() const { return static_cast<int>(img_.size()); }
    int apply(int p) const { return img_[p]; }                 // 0-based
    const std::vector<int>& images() const { return img_; }

    Perm compose(const Perm& rhs) const;  // (this o rhs)(p) = this(rhs(p))
    Perm inverse() const;
    bool is_identity() const;

    std::vector<std::vector<int>> cycles() const;  // canonical: min first, sorted by min (0-based)
    Partition cycle_type() const;

    // FixTop: append fixed points degree+1..m. FixBottom: relabel onto the top
    // m-degree+1..m points, fixing 1..m-degree.
    Perm embed(int m, EmbedMode mode) const;

    int max_moved() const;  // largest 1-based moved point, 0 for the identity

    std::string str() const;  // cycle notation, "()" for identity

    auto operator<=>(const Perm&) const = default;

    size_t hash() const;

  private:
    std::vector<int> img_;
};

// All of S_degree in lexicographic one-line order.
std::vector<Perm> symmetric_group(int degree);

}  // namespace dcalg
