#include "dcalg/fq.hpp"

#include <doctest.h>

using namespace dcalg;

TEST_CASE("field axioms hold for the table-driven fields") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        const Field& F = Field::get(q);
        for (int a = 0; a < q; ++a) {
            CHECK(F.add(a, 0) == a);
            CHECK(F.mul(a, 1) == a);
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a) CHECK(F.mul(a, F.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                }
            }
        }
    }
    CHECK_THROWS(Field::get(6));
}

TEST_CASE("group orders of invertible matrices") {
    CHECK(general_linear_group(2, 2).size() == 6);
    CHECK(general_linear_group(2, 3).size() == 48);
    CHECK(general_linear_group(3, 2).size() == 168);
    CHECK(gl_order(2, 2) == 6);
    CHECK(gl_order(2, 3) == 48);
    CHECK(gl_order(3, 2) == 168);
    CHECK(gl_order(5, 2) == 9999360);
}

TEST_CASE("matrix inverse and block structure") {
    for (const auto& m : general_linear_group(3, 2)) {
        CHECK(m.mul(m.inverse()).is_identity());
        CHECK(m.invertible());
    }
    FqMat block = FqMat::from_rows(2, {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
    CHECK(block.is_identity_outside_lower_block(2));
    CHECK(!block.is_identity_outside_lower_block(1));
    CHECK(block.leading_block_level() == 3);
    FqMat top = FqMat::from_rows(2, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    CHECK(top.leading_block_level() == 2);
    CHECK(FqMat::identity(2, 3).leading_block_level() == 0);
}

TEST_CASE("hex grammar round trip") {
    FqMat m = FqMat::from_rows(3, {{2, 0}, {0, 1}});
    CHECK(m.hex() == "2001");
    CHECK(FqMat::parse_hex(3, 2, "2001") == m);
    CHECK_THROWS(FqMat::parse_hex(3, 2, "20012"));
    CHECK_THROWS(FqMat::parse_hex(2, 2, "2001"));
}
