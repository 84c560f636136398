#include "dcalg/fq.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace dcalg {

namespace {

// 5x5 matrix over GF(2), one row per 5-bit lane.
using Bits5 = std::array<uint8_t, 5>;

Bits5 b5_mul(const Bits5& a, const Bits5& b) {
    Bits5 c{};
    for (int i = 0; i < 5; ++i) {
        uint8_t row = 0, sel = a[i];
        for (int k = 0; k < 5; ++k)
            if (sel & (1 << k)) row ^= b[k];
        c[i] = row;
    }
    return c;
}

uint32_t b5_pack(const Bits5& a) {
    uint32_t v = 0;
    for (int i = 0; i < 5; ++i) v |= static_cast<uint32_t>(a[i]) << (5 * i);
    return v;
}

// Smallest j such that the matrix is diag(N, I_{5-j}).
int b5_leading_level(const Bits5& a) {
    for (int j = 0; j <= 5; ++j) {
        bool ok = true;
        for (int r = 0; r < 5 && ok; ++r) {
            uint8_t expect_mask = r >= j ? static_cast<uint8_t>(1 << r)
                                         : static_cast<uint8_t>(a[r] & ((1 << j) - 1));
            uint8_t masked = r >= j ? a[r] : static_cast<uint8_t>(a[r] & ~((1 << j) - 1));
            if (r >= j && a[r] != expect_mask) ok = false;
            if (r < j && masked != 0) ok = false;
        }
        if (ok) return j;
    }
    return 5;
}

Bits5 b5_from_mat(const FqMat& m) {
    Bits5 a{};
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c)
            if (m.at(r, c)) a[r] |= static_cast<uint8_t>(1 << c);
    return a;
}

// All invertible m x m blocks over GF(2) embedded as diag(I_{5-m-offset}...):
// returns 5x5 matrices equal to the identity outside rows/cols [offset,
// offset+m).
std::vector<Bits5> gl2_block(int offset, int m) {
    std::vector<Bits5> out;
    auto blocks = general_linear_group(m, 2);
    for (const auto& g : blocks) {
        Bits5 a{};
        for (int r = 0; r < 5; ++r) a[r] = static_cast<uint8_t>(1 << r);
        for (int r = 0; r < m; ++r) {
            uint8_t row = 0;
            for (int c = 0; c < m; ++c)
                if (g.at(r, c)) row |= static_cast<uint8_t>(1 << (offset + c));
            a[offset + r] = row;
        }
        out.push_back(a);
    }
    return out;
}

}  // namespace

FqMat gl5_counterexample_matrix() {
    return FqMat::from_rows(2, {{1, 1, 1, 0, 0},
                                {1, 0, 0, 0, 0},
                                {0, 1, 0, 0, 1},
                                {0, 0, 1, 0, 0},
                                {0, 0, 0, 1, 0}});
}

// Enumerates the full two-sided class (I_1 + GL_4) * M * (I_2 + GL_3) of the
// witness matrix with bit-packed arithmetic and returns the minimal leading
// block level over the class. A 2^25-bit table deduplicates the products.
int gl5_counterexample_min_level(long long* orbit_size_out) {
    Bits5 M = b5_from_mat(gl5_counterexample_matrix());
    auto left = gl2_block(1, 4);   // stabilizes the first basis vector
    auto right = gl2_block(2, 3);  // stabilizes the first two
    std::vector<bool> seen(1u << 25, false);
    long long count = 0;
    int best = 5;
    for (const auto& A : left) {
        Bits5 AM = b5_mul(A, M);
        for (const auto& B : right) {
            Bits5 T = b5_mul(AM, B);
            uint32_t key = b5_pack(T);
            if (seen[key]) continue;
            seen[key] = true;
            ++count;
            int lvl = b5_leading_level(T);
            if (lvl < best) best = lvl;
        }
    }
    if (orbit_size_out) *orbit_size_out = count;
    return best;
}

}  // namespace dcalg
