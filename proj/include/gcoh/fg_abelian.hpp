#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gcoh/lattice.hpp"
#include "gcoh/smith.hpp"

namespace gcoh {

// Element of Z^n, read modulo a relation lattice.
using GroupElementVector = std::vector<Integer>;

// A finitely generated abelian group presented as Z^ambient_rank modulo the
// row lattice of a relation matrix. Invariant factors (all >= 2, each
// dividing the next) and the free rank are computed once at construction;
// they are a complete isomorphism invariant and define operator==.
class FgAbelianGroup {
public:
    FgAbelianGroup() : FgAbelianGroup(0, IntMatrix(0, 0)) {}

    FgAbelianGroup(std::size_t ambient_rank, IntMatrix relations)
        : ambient_rank_(ambient_rank), relations_(std::move(relations)) {
        if (relations_.rows() == 0) relations_ = IntMatrix(0, ambient_rank_);
        if (relations_.cols() != ambient_rank_)
            throw inconsistency_error("FgAbelianGroup: relation width != ambient rank");
        snf_ = smith_normal_form(relations_);
        diagonal_ = snf_.diagonal();
        for (std::size_t i = 0; i < ambient_rank_; ++i) {
            const Integer& d = diagonal_[i];
            if (d == 0)
                canonical_positions_.push_back(i); // free coordinate, placed after torsion
            else if (d >= 2)
                torsion_positions_.push_back(i);
        }
        for (std::size_t p : torsion_positions_) invariant_factors_.push_back(diagonal_[p]);
        relation_lattice_ = Lattice(relations_);
    }

    static FgAbelianGroup free_group(std::size_t rank) { return FgAbelianGroup(rank, IntMatrix(0, rank)); }

    static FgAbelianGroup from_invariant_factors(const std::vector<Integer>& factors,
                                                 std::size_t free_rank = 0) {
        const std::size_t n = factors.size() + free_rank;
        IntMatrix rel(factors.size(), n);
        for (std::size_t i = 0; i < factors.size(); ++i) rel(i, i) = factors[i];
        return FgAbelianGroup(n, rel);
    }

    std::size_t ambient_rank() const { return ambient_rank_; }
    const IntMatrix& relations() const { return relations_; }
    const std::vector<Integer>& invariant_factors() const { return invariant_factors_; }
    std::size_t free_rank() const { return canonical_positions_.size(); }
    std::size_t torsion_count() const { return torsion_positions_.size(); }
    // canonical coordinates: torsion coordinates first, then free ones
    std::size_t canonical_dim() const { return torsion_positions_.size() + canonical_positions_.size(); }

    bool is_trivial() const { return canonical_dim() == 0; }
    bool is_finite() const { return canonical_positions_.empty(); }

    // 0 when infinite
    Integer order() const {
        if (!is_finite()) return 0;
        Integer n = 1;
        for (const auto& d : invariant_factors_) n *= d;
        return n;
    }

    // Isomorphism-class equality.
    bool operator==(const FgAbelianGroup& o) const {
        return invariant_factors_ == o.invariant_factors_ &&
               canonical_positions_.size() == o.canonical_positions_.size();
    }

    // Reduce an ambient vector to canonical coordinates: residues mod the
    // invariant factors, then the free coordinates.
    std::vector<Integer> canonical_form(const GroupElementVector& x) const {
        if (x.size() != ambient_rank_) throw inconsistency_error("canonical_form: wrong dimension");
        std::vector<Integer> c = x * snf_.v;
        std::vector<Integer> out;
        out.reserve(canonical_dim());
        for (std::size_t p : torsion_positions_) {
            Integer r = c[p] % diagonal_[p];
            if (r < 0) r += diagonal_[p];
            out.push_back(r);
        }
        for (std::size_t p : canonical_positions_) out.push_back(c[p]);
        return out;
    }

    bool element_is_zero(const GroupElementVector& x) const {
        for (const auto& v : canonical_form(x))
            if (v != 0) return false;
        return true;
    }

    bool elements_equal(const GroupElementVector& a, const GroupElementVector& b) const {
        GroupElementVector d(a);
        for (std::size_t i = 0; i < d.size(); ++i) d[i] -= b[i];
        return element_is_zero(d);
    }

    // Ambient representative of the i-th canonical generator.
    GroupElementVector canonical_generator(std::size_t i) const {
        const std::size_t p = i < torsion_positions_.size()
                                  ? torsion_positions_[i]
                                  : canonical_positions_[i - torsion_positions_.size()];
        return snf_.v_inverse.row(p);
    }

    // Order of the i-th canonical generator (0 for a free one).
    Integer canonical_order(std::size_t i) const {
        return i < torsion_positions_.size() ? invariant_factors_[i] : Integer(0);
    }

    const Lattice& relation_lattice() const { return relation_lattice_; }

    std::string to_string() const {
        if (is_trivial()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& d : invariant_factors_) {
            os << (first ? "" : " + ") << "Z/" << d;
            first = false;
        }
        const std::size_t f = canonical_positions_.size();
        if (f > 0) {
            os << (first ? "" : " + ") << "Z";
            if (f > 1) os << "^" << f;
        }
        return os.str();
    }

private:
    std::size_t ambient_rank_;
    IntMatrix relations_;
    SmithResult snf_;
    std::vector<Integer> diagonal_;          // length = ambient_rank
    std::vector<Integer> invariant_factors_; // entries >= 2
    std::vector<std::size_t> torsion_positions_;
    std::vector<std::size_t> canonical_positions_; // free positions
    Lattice relation_lattice_;
};

inline FgAbelianGroup group_from_relations(std::size_t ambient_rank, const IntMatrix& relations) {
    return FgAbelianGroup(ambient_rank, relations);
}

inline FgAbelianGroup quotient(const FgAbelianGroup& g, const IntMatrix& subgroup_generators) {
    if (subgroup_generators.rows() > 0 && subgroup_generators.cols() != g.ambient_rank())
        throw input_error("quotient: generator width != ambient rank");
    return FgAbelianGroup(g.ambient_rank(), vstack(g.relations(), subgroup_generators));
}

inline FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    IntMatrix rel(a.relations().rows() + b.relations().rows(), a.ambient_rank() + b.ambient_rank());
    for (std::size_t i = 0; i < a.relations().rows(); ++i)
        for (std::size_t j = 0; j < a.ambient_rank(); ++j) rel(i, j) = a.relations()(i, j);
    for (std::size_t i = 0; i < b.relations().rows(); ++i)
        for (std::size_t j = 0; j < b.ambient_rank(); ++j)
            rel(a.relations().rows() + i, a.ambient_rank() + j) = b.relations()(i, j);
    return FgAbelianGroup(a.ambient_rank() + b.ambient_rank(), rel);
}

// Subgroup of elements whose order divides n: direct sum of Z/gcd(n, d_i).
inline FgAbelianGroup torsion_subgroup(const FgAbelianGroup& g, const Integer& n) {
    if (n < 1) throw input_error("torsion_subgroup: n must be >= 1");
    std::vector<Integer> factors;
    for (const auto& d : g.invariant_factors()) {
        Integer e = gcd_int(n, d);
        if (e >= 2) factors.push_back(e);
    }
    return FgAbelianGroup::from_invariant_factors(factors);
}

// Hom(A, B) for finitely generated abelian groups given by invariant factors:
// Hom(Z/a, Z/b) = Z/gcd(a,b), Hom(Z/a, Z) = 0, Hom(Z, Z/b) = Z/b, Hom(Z, Z) = Z.
inline FgAbelianGroup hom_group(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    std::vector<Integer> factors;
    std::size_t free_rank = 0;
    const std::size_t a_free = a.canonical_dim() - a.torsion_count();
    const std::size_t b_free = b.canonical_dim() - b.torsion_count();
    for (const auto& da : a.invariant_factors())
        for (const auto& db : b.invariant_factors()) {
            Integer e = gcd_int(da, db);
            if (e >= 2) factors.push_back(e);
        }
    for (std::size_t i = 0; i < a_free; ++i)
        for (const auto& db : b.invariant_factors()) factors.push_back(db);
    free_rank = a_free * b_free;
    return FgAbelianGroup::from_invariant_factors(factors, free_rank);
}

// Presentation of the subquotient
//     { x in Z^ambient : x * f  lies in the target relation lattice }
//     -----------------------------------------------------------------
//     row lattice of g  +  middle relation lattice
// keeping enough data to convert between ambient cocycles and canonical
// coordinates of the quotient. This is the engine behind every kernel,
// fixed-point and cohomology computation in the library.
class Subquotient {
public:
    Subquotient(std::size_t ambient, const IntMatrix& middle_relations, const IntMatrix& f,
                const IntMatrix& target_relations, const IntMatrix& g)
        : ambient_(ambient) {
        if (f.rows() != ambient) throw inconsistency_error("Subquotient: f has wrong height");
        IntMatrix stacked = vstack(f, target_relations.rows() ? target_relations : IntMatrix(0, f.cols()));
        IntMatrix ker = left_kernel(stacked);
        IntMatrix gens(ker.rows(), ambient);
        for (std::size_t i = 0; i < ker.rows(); ++i)
            for (std::size_t j = 0; j < ambient; ++j) gens(i, j) = ker(i, j);
        kernel_ = Lattice(std::move(gens));
        basis_ = kernel_.basis();
        basis_lattice_ = Lattice(basis_);

        IntMatrix denom = vstack(g.rows() ? g : IntMatrix(0, ambient),
                                 middle_relations.rows() ? middle_relations : IntMatrix(0, ambient));
        IntMatrix rel(denom.rows(), basis_.rows());
        for (std::size_t i = 0; i < denom.rows(); ++i) {
            auto coeffs = basis_lattice_.solve(denom.row(i));
            if (!coeffs)
                throw inconsistency_error(
                    "Subquotient: denominator is not contained in the kernel (d(d(x)) != 0?)");
            rel.set_row(i, *coeffs);
        }
        group_ = FgAbelianGroup(basis_.rows(), rel);
    }

    const FgAbelianGroup& group() const { return group_; }
    const IntMatrix& kernel_basis() const { return basis_; }

    bool contains(const GroupElementVector& x) const { return basis_lattice_.contains(x); }

    // Canonical coordinates of an ambient element of the kernel.
    std::vector<Integer> coordinates(const GroupElementVector& x) const {
        auto coeffs = basis_lattice_.solve(x);
        if (!coeffs) throw inconsistency_error("Subquotient: element is not in the kernel");
        return group_.canonical_form(*coeffs);
    }

    // Ambient representative of the i-th canonical generator of the quotient.
    GroupElementVector representative(std::size_t i) const {
        return group_.canonical_generator(i) * basis_;
    }

private:
    std::size_t ambient_;
    Lattice kernel_;
    IntMatrix basis_;
    Lattice basis_lattice_;
    FgAbelianGroup group_;
};

// ker(f modulo the target relations) / im(g), with an optional relation
// matrix on the middle lattice ("middle" defaults to a free lattice).
inline FgAbelianGroup kernel_mod_image(const IntMatrix& f, const IntMatrix& g,
                                       const IntMatrix& target_relations,
                                       const IntMatrix& middle_relations = IntMatrix(0, 0)) {
    IntMatrix middle = middle_relations;
    if (middle.rows() == 0) middle = IntMatrix(0, f.rows());
    return Subquotient(f.rows(), middle, f, target_relations, g).group();
}

} // namespace gcoh
