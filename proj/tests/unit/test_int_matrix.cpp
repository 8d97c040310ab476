#include <catch2/catch_amalgamated.hpp>

#include "gcoh/int_matrix.hpp"
#include "gcoh/lattice.hpp"

using namespace gcoh;

TEST_CASE("matrix product and application conventions") {
    IntMatrix a{{1, 2}, {3, 4}};
    IntMatrix b{{0, 1}, {1, 0}};
    IntMatrix ab = a * b;
    CHECK(ab == IntMatrix{{2, 1}, {4, 3}});
    std::vector<Integer> x{1, 1};
    CHECK(x * a == std::vector<Integer>{4, 6});
}

TEST_CASE("determinant is exact") {
    CHECK(determinant(IntMatrix::identity(4)) == 1);
    CHECK(determinant(IntMatrix{{2, 0}, {0, 3}}) == 6);
    CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
    CHECK(determinant(IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}) == 1);
    // a matrix whose cofactor growth would overflow int64 if arithmetic were fixed-width
    IntMatrix big(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) big(i, j) = Integer(1) << (4 * (i + j));
    CHECK_NOTHROW(determinant(big));
}

TEST_CASE("stacking helpers") {
    IntMatrix a{{1, 2}};
    IntMatrix b{{3, 4}};
    CHECK(vstack(a, b) == IntMatrix{{1, 2}, {3, 4}});
    CHECK(hstack(a, b) == IntMatrix{{1, 2, 3, 4}});
    IntMatrix d = block_diagonal({IntMatrix{{2}}, IntMatrix{{3}}});
    CHECK(d == IntMatrix{{2, 0}, {0, 3}});
}

TEST_CASE("row echelon solves and kernels") {
    IntMatrix m{{2, 4, 0}, {0, 6, 2}, {2, 10, 2}}; // row3 = row1 + row2
    RowEchelon e = row_echelon(m);
    CHECK(e.rank() == 2);
    CHECK(e.transform * m == e.echelon);
    CHECK(is_unimodular(e.transform));

    IntMatrix k = left_kernel(m);
    REQUIRE(k.rows() == 1);
    CHECK((k * m).is_zero());

    Lattice lat(m);
    CHECK(lat.contains({2, 4, 0}));
    CHECK(lat.contains({2, 10, 2}));
    CHECK_FALSE(lat.contains({1, 2, 0}));
    auto sol = lat.solve({4, 14, 2});
    REQUIRE(sol.has_value());
    CHECK(*sol * m == std::vector<Integer>{4, 14, 2});
}

TEST_CASE("lattice equality ignores generating sets") {
    Lattice a(IntMatrix{{2, 0}, {0, 3}});
    Lattice b(IntMatrix{{2, 3}, {2, -3}});
    CHECK_FALSE(lattices_equal(a, b));
    Lattice c(IntMatrix{{2, 0}, {0, 3}, {2, 3}});
    CHECK(lattices_equal(a, c));
}
