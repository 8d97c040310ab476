#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gcoh/int_matrix.hpp"

namespace gcoh {

// Integer row echelon form H = U * M with U unimodular. Pivot entries are
// positive and pivot columns strictly increase row by row; entries above a
// pivot are not reduced (not needed by the callers here).
struct RowEchelon {
    IntMatrix echelon;                  // H
    IntMatrix transform;                // U, with U * M = H
    std::vector<std::size_t> pivot_cols; // pivot column of each pivot row
    std::size_t rank() const { return pivot_cols.size(); }
};

inline RowEchelon row_echelon(const IntMatrix& m) {
    RowEchelon out;
    out.echelon = m;
    out.transform = IntMatrix::identity(m.rows());
    IntMatrix& h = out.echelon;
    IntMatrix& u = out.transform;
    std::size_t r = 0;
    for (std::size_t j = 0; j < m.cols() && r < m.rows(); ++j) {
        for (;;) {
            // smallest nonzero entry in column j at or below row r
            std::size_t best = m.rows();
            for (std::size_t i = r; i < m.rows(); ++i) {
                if (h(i, j) == 0) continue;
                if (best == m.rows() || abs_int(h(i, j)) < abs_int(h(best, j))) best = i;
            }
            if (best == m.rows()) break;
            h.swap_rows(r, best);
            u.swap_rows(r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < m.rows(); ++i) {
                if (h(i, j) == 0) continue;
                Integer q = rounded_div(h(i, j), h(r, j));
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
                if (h(i, j) != 0) clean = false;
            }
            if (clean) {
                if (h(r, j) < 0) {
                    h.negate_row(r);
                    u.negate_row(r);
                }
                out.pivot_cols.push_back(j);
                ++r;
                break;
            }
        }
    }
    return out;
}

// Basis (as rows) of {x : x * m = 0}.
inline IntMatrix left_kernel(const IntMatrix& m) {
    RowEchelon e = row_echelon(m);
    const std::size_t k = m.rows() - e.rank();
    IntMatrix ker(k, m.rows());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) ker(i, j) = e.transform(e.rank() + i, j);
    return ker;
}

// The subgroup of Z^n generated by a set of row vectors, with membership
// and exact linear solving against the original generators.
class Lattice {
public:
    Lattice() = default;
    explicit Lattice(IntMatrix generators)
        : gens_(std::move(generators)), ech_(row_echelon(gens_)) {}

    std::size_t ambient_dim() const { return gens_.cols(); }
    std::size_t rank() const { return ech_.rank(); }
    const IntMatrix& generators() const { return gens_; }

    // Basis rows of the lattice (echelon rows).
    IntMatrix basis() const {
        IntMatrix b(ech_.rank(), gens_.cols());
        for (std::size_t i = 0; i < ech_.rank(); ++i)
            for (std::size_t j = 0; j < gens_.cols(); ++j) b(i, j) = ech_.echelon(i, j);
        return b;
    }

    // Coefficients z with z * generators = x, if x lies in the lattice.
    std::optional<std::vector<Integer>> solve(const std::vector<Integer>& x) const {
        if (x.size() != gens_.cols()) throw inconsistency_error("Lattice::solve: dimension mismatch");
        std::vector<Integer> rem = x;
        std::vector<Integer> w(gens_.rows());
        for (std::size_t r = 0; r < ech_.rank(); ++r) {
            const std::size_t j = ech_.pivot_cols[r];
            if (rem[j] == 0) continue;
            const Integer& piv = ech_.echelon(r, j);
            if (!divides(piv, rem[j])) return std::nullopt;
            Integer c = rem[j] / piv;
            for (std::size_t t = j; t < gens_.cols(); ++t) rem[t] -= c * ech_.echelon(r, t);
            w[r] = c;
        }
        for (const auto& v : rem)
            if (v != 0) return std::nullopt;
        return w * ech_.transform;
    }

    bool contains(const std::vector<Integer>& x) const { return solve(x).has_value(); }

    bool contains_rows(const IntMatrix& m) const {
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!contains(m.row(i))) return false;
        return true;
    }

    bool is_full() const { return rank() == ambient_dim() && index_is_one(); }

private:
    bool index_is_one() const {
        // full rank with all pivots 1 and echelon reduced means Z^n; cheaper:
        // every standard basis vector is a member
        for (std::size_t j = 0; j < gens_.cols(); ++j) {
            std::vector<Integer> e(gens_.cols());
            e[j] = 1;
            if (!contains(e)) return false;
        }
        return true;
    }

    IntMatrix gens_;
    RowEchelon ech_;
};

inline bool lattices_equal(const Lattice& a, const Lattice& b) {
    return a.contains_rows(b.generators()) && b.contains_rows(a.generators());
}

inline bool is_unimodular(const IntMatrix& m) {
    return m.rows() == m.cols() && abs_int(determinant(m)) == 1;
}

} // namespace gcoh
