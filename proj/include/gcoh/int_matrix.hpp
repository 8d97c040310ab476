#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "gcoh/integer.hpp"

namespace gcoh {

// Dense row-major matrix over Z. Relation matrices store one relation per
// row; maps Z^a -> Z^b are a x b matrices applied on the right of a row
// vector, so "f then g" is the product f * g.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<Integer>> data) {
        rows_ = data.size();
        cols_ = rows_ == 0 ? 0 : data.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto& row : data) {
            if (row.size() != cols_) throw input_error("IntMatrix: ragged initializer");
            for (const auto& e : row) entries_.push_back(e);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const = default;

    bool is_zero() const {
        for (const auto& e : entries_)
            if (e != 0) return false;
        return true;
    }

    std::vector<Integer> row(std::size_t i) const {
        return std::vector<Integer>(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                    entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }
    void set_row(std::size_t i, const std::vector<Integer>& v) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    // row a += q * row b
    void add_row_multiple(std::size_t a, std::size_t b, const Integer& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < cols_; ++j) {
            const Integer& e = (*this)(b, j);
            if (e != 0) (*this)(a, j) += q * e;
        }
    }
    // col a += q * col b
    void add_col_multiple(std::size_t a, std::size_t b, const Integer& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < rows_; ++i) {
            const Integer& e = (*this)(i, b);
            if (e != 0) (*this)(i, a) += q * e;
        }
    }
    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
    }
    void negate_col(std::size_t j) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
    }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw inconsistency_error("IntMatrix: dimension mismatch in product");
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Integer& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Integer& bkj = b(k, j);
                    if (bkj != 0) c(i, j) += aik * bkj;
                }
            }
        return c;
    }
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw inconsistency_error("IntMatrix: dimension mismatch in sum");
        IntMatrix c = a;
        for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] += b.entries_[i];
        return c;
    }
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw inconsistency_error("IntMatrix: dimension mismatch in difference");
        IntMatrix c = a;
        for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] -= b.entries_[i];
        return c;
    }
    IntMatrix operator-() const {
        IntMatrix c = *this;
        for (auto& e : c.entries_) e = -e;
        return c;
    }
    friend IntMatrix operator*(const Integer& s, const IntMatrix& a) {
        IntMatrix c = a;
        for (auto& e : c.entries_) e *= s;
        return c;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
        os << "[";
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? "; " : "");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
        }
        return os << "]";
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

inline std::vector<Integer> operator-(std::vector<Integer> a, const std::vector<Integer>& b) {
    if (a.size() != b.size()) throw inconsistency_error("vector difference: size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline std::vector<Integer> operator+(std::vector<Integer> a, const std::vector<Integer>& b) {
    if (a.size() != b.size()) throw inconsistency_error("vector sum: size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

// Row vector times matrix.
inline std::vector<Integer> operator*(const std::vector<Integer>& x, const IntMatrix& m) {
    if (x.size() != m.rows()) throw inconsistency_error("vector*matrix: dimension mismatch");
    std::vector<Integer> y(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Integer& e = m(i, j);
            if (e != 0) y[j] += x[i] * e;
        }
    }
    return y;
}

inline IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom) {
    if (top.rows() == 0) return bottom;
    if (bottom.rows() == 0) return top;
    if (top.cols() != bottom.cols()) throw inconsistency_error("vstack: column mismatch");
    IntMatrix m(top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j) m(i, j) = top(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        for (std::size_t j = 0; j < bottom.cols(); ++j) m(top.rows() + i, j) = bottom(i, j);
    return m;
}

inline IntMatrix hstack(const IntMatrix& left, const IntMatrix& right) {
    if (left.cols() == 0 && left.rows() == 0) return right;
    if (right.cols() == 0 && right.rows() == 0) return left;
    if (left.rows() != right.rows()) throw inconsistency_error("hstack: row mismatch");
    IntMatrix m(left.rows(), left.cols() + right.cols());
    for (std::size_t i = 0; i < left.rows(); ++i) {
        for (std::size_t j = 0; j < left.cols(); ++j) m(i, j) = left(i, j);
        for (std::size_t j = 0; j < right.cols(); ++j) m(i, left.cols() + j) = right(i, j);
    }
    return m;
}

inline IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    IntMatrix m(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

// Exact determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(IntMatrix m) {
    if (m.rows() != m.cols()) throw inconsistency_error("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : Integer(-m(n - 1, n - 1));
}

} // namespace gcoh
