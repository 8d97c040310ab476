#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "gcoh/smith.hpp"
#include "gcoh/lattice.hpp"

using namespace gcoh;

namespace {

// Independent oracle: the product d_1 ... d_k of the Smith diagonal equals
// the gcd of all k x k minors.
Integer minor_gcd(const IntMatrix& m, std::size_t k) {
    std::vector<std::size_t> rows(k), cols(k);
    Integer g = 0;
    std::vector<std::size_t> rsel(k), csel(k);
    // enumerate k-subsets of rows and columns
    auto next_subset = [](std::vector<std::size_t>& s, std::size_t n) {
        std::size_t k2 = s.size();
        for (std::size_t i = k2; i-- > 0;) {
            if (s[i] + (k2 - i) < n) {
                ++s[i];
                for (std::size_t j = i + 1; j < k2; ++j) s[j] = s[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < k; ++i) rsel[i] = i;
    do {
        for (std::size_t i = 0; i < k; ++i) csel[i] = i;
        do {
            IntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rsel[i], csel[j]);
            g = gcd_int(g, determinant(sub));
        } while (next_subset(csel, m.cols()));
    } while (next_subset(rsel, m.rows()));
    return g;
}

void check_snf(const IntMatrix& m) {
    SmithResult s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(is_unimodular(s.u));
    CHECK(is_unimodular(s.v));
    CHECK(s.v * s.v_inverse == IntMatrix::identity(m.cols()));
    auto diag = s.diagonal();
    const std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i + 1 < n; ++i) {
        CHECK(diag[i] >= 0);
        if (diag[i + 1] != 0) CHECK(divides(diag[i], diag[i + 1]));
    }
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j) CHECK(s.d(i, j) == 0);
    // determinantal-divisor invariance
    Integer prod = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        prod = 1;
        for (std::size_t i = 0; i < k; ++i) prod *= diag[i];
        CHECK(minor_gcd(m, k) == prod);
    }
}

} // namespace

TEST_CASE("smith normal form on the basic cases") {
    SECTION("zero matrix") {
        SmithResult s = smith_normal_form(IntMatrix(2, 2));
        CHECK(s.d.is_zero());
    }
    SECTION("diag(2,3) has invariant factors 1, 6") {
        SmithResult s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
        CHECK(s.d == IntMatrix{{1, 0}, {0, 6}});
    }
    SECTION("[[2,4],[6,8]] -> diag(2,4)") {
        SmithResult s = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
        CHECK(s.d == IntMatrix{{2, 0}, {0, 4}});
        check_snf(IntMatrix{{2, 4}, {6, 8}});
    }
    SECTION("rectangular") {
        check_snf(IntMatrix{{6, 10, 15}});
        check_snf(IntMatrix{{6}, {10}, {15}});
        SmithResult s = smith_normal_form(IntMatrix{{6, 10, 15}});
        CHECK(s.d(0, 0) == 1);
    }
    SECTION("empty shapes") {
        CHECK_NOTHROW(smith_normal_form(IntMatrix(0, 3)));
        CHECK_NOTHROW(smith_normal_form(IntMatrix(3, 0)));
        CHECK_NOTHROW(smith_normal_form(IntMatrix(0, 0)));
    }
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> dim(1, 5), entry(-20, 20);
    for (int trial = 0; trial < 60; ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
        check_snf(m);
    }
}
