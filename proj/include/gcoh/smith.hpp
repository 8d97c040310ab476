#pragma once

#include <cstddef>
#include <vector>

#include "gcoh/int_matrix.hpp"

namespace gcoh {

// D = U * m * V with U, V unimodular, D diagonal, and the diagonal entries
// nonnegative with d1 | d2 | ... . v_inverse is tracked alongside V because
// presentations need both change-of-basis directions.
struct SmithResult {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
    IntMatrix v_inverse;

    std::vector<Integer> diagonal() const {
        std::vector<Integer> diag(d.cols());
        const std::size_t n = d.rows() < d.cols() ? d.rows() : d.cols();
        for (std::size_t i = 0; i < n; ++i) diag[i] = d(i, i);
        return diag;
    }
};

inline SmithResult smith_normal_form(const IntMatrix& m) {
    SmithResult out;
    out.d = m;
    out.u = IntMatrix::identity(m.rows());
    out.v = IntMatrix::identity(m.cols());
    out.v_inverse = IntMatrix::identity(m.cols());
    IntMatrix& d = out.d;
    IntMatrix& u = out.u;
    IntMatrix& v = out.v;
    IntMatrix& vi = out.v_inverse;

    auto swap_cols = [&](std::size_t a, std::size_t b) {
        d.swap_cols(a, b);
        v.swap_cols(a, b);
        vi.swap_rows(a, b);
    };
    auto add_col = [&](std::size_t a, std::size_t b, const Integer& q) {
        // col a += q * col b; inverse operation on the rows of V^{-1}
        d.add_col_multiple(a, b, q);
        v.add_col_multiple(a, b, q);
        vi.add_row_multiple(b, a, -q);
    };

    const std::size_t n = m.rows() < m.cols() ? m.rows() : m.cols();
    for (std::size_t t = 0; t < n; ++t) {
        // move the smallest nonzero entry of the trailing block to (t, t)
        std::size_t pr = m.rows(), pc = m.cols();
        for (std::size_t i = t; i < m.rows(); ++i)
            for (std::size_t j = t; j < m.cols(); ++j) {
                if (d(i, j) == 0) continue;
                if (pr == m.rows() || abs_int(d(i, j)) < abs_int(d(pr, pc))) {
                    pr = i;
                    pc = j;
                }
            }
        if (pr == m.rows()) break; // trailing block is zero
        d.swap_rows(t, pr);
        u.swap_rows(t, pr);
        swap_cols(t, pc);

        for (;;) {
            bool again = false;
            for (std::size_t i = t + 1; i < m.rows(); ++i) {
                if (d(i, t) == 0) continue;
                Integer q = rounded_div(d(i, t), d(t, t));
                d.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (d(i, t) != 0) {
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    again = true;
                }
            }
            if (again) continue;
            for (std::size_t j = t + 1; j < m.cols(); ++j) {
                if (d(t, j) == 0) continue;
                Integer q = rounded_div(d(t, j), d(t, t));
                add_col(j, t, -q);
                if (d(t, j) != 0) {
                    swap_cols(t, j);
                    again = true;
                }
            }
            if (again) continue;
            // pivot now alone in its row and column; force divisibility of
            // the rest of the block by folding offending rows into row t
            bool fixed = false;
            for (std::size_t i = t + 1; i < m.rows() && !fixed; ++i)
                for (std::size_t j = t + 1; j < m.cols() && !fixed; ++j)
                    if (!divides(d(t, t), d(i, j))) {
                        d.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    return out;
}

// Invariant factors >= 2 of coker(m) together with its free rank, i.e. of
// Z^cols modulo the row lattice of m.
inline std::pair<std::vector<Integer>, std::size_t> cokernel_shape(const IntMatrix& m) {
    SmithResult s = smith_normal_form(m);
    std::vector<Integer> factors;
    std::size_t free_rank = 0;
    for (const Integer& d : s.diagonal()) {
        if (d == 0)
            ++free_rank;
        else if (d >= 2)
            factors.push_back(d);
    }
    return {factors, free_rank};
}

} // namespace gcoh
