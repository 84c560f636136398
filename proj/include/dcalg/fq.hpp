#pragma once

#include "dcalg/rational.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace dcalg {

// Table-driven arithmetic for GF(q), q = p^e a prime power. Elements are
// indices 0..q-1; for e > 1 the index encodes polynomial coefficients base p.
class Field {
  public:
    explicit Field(int q);

    int q() const { return q_; }
    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add(a, neg_[b]); }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const;

    static const Field& get(int q);  // cached per q

  private:
    int q_;
    std::vector<int> add_, mul_, neg_, inv_;
};

// Square matrix over GF(q), entries row-major.
class FqMat {
  public:
    FqMat() = default;
    FqMat(int q, int n);  // zero matrix
    static FqMat identity(int q, int n);
    static FqMat from_rows(int q, const std::vector<std::vector<int>>& rows);

    int q() const { return q_; }
    int n() const { return n_; }
    int at(int r, int c) const { return a_[r * n_ + c]; }
    void set(int r, int c, int v) { a_[r * n_ + c] = static_cast<uint8_t>(v); }

    FqMat mul(const FqMat& rhs) const;
    FqMat inverse() const;  // throws when singular
    bool invertible() const;
    bool is_identity() const;

    // Smallest j such that the matrix is block diag(N, I_{n-j}) with N of size j.
    int leading_block_level() const;
    // Identity outside the lower-right k x k block test (membership in the
    // subgroup fixing the first n-k basis vectors).
    bool is_identity_outside_lower_block(int block) const;

    std::string hex() const;                       // row-major, one hex digit per entry (q <= 16)
    static FqMat parse_hex(int q, int n, const std::string& text);

    auto operator<=>(const FqMat&) const = default;
    size_t hash() const;

  private:
    int q_ = 0;
    int n_ = 0;
    std::vector<uint8_t> a_;
};

Int gl_order(int n, int q);  // (q^n-1)(q^n-q)...(q^n-q^{n-1})

// All invertible n x n matrices over GF(q), deterministic order.
// Guarded: throws when the group order exceeds max_elements.
std::vector<FqMat> general_linear_group(int n, int q, const Int& max_elements = Int(1) << 24);

}  // namespace dcalg
