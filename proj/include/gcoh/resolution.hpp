#pragma once

#include <cstddef>
#include <vector>

#include "gcoh/gmodule.hpp"

namespace gcoh {

// Element of the integral group ring ZG, one coefficient per group element.
using GroupRingElt = std::vector<Integer>;

// Start of a free resolution of Z over ZG, built from the group's
// presentation:
//
//     ZG^u --d3--> ZG^t --d2--> ZG^s --d1--> ZG --aug--> Z --> 0
//
// d1 sends the i-th basis vector to x_i - 1, d2 carries the Fox derivatives
// of the relators, and d3 is filled with a generating set of the integer
// kernel of d2 (any Z-generating set of the kernel generates it over ZG, so
// exactness at ZG^t holds by construction). Exactness at ZG and ZG^s is
// checked with integer linear algebra at construction; a presentation that
// fails to present the group is rejected here rather than silently giving
// wrong cohomology.
class ResolutionComplex {
public:
    explicit ResolutionComplex(GroupPtr group) : group_(std::move(group)) {
        const FiniteGroup& g = *group_;
        const std::size_t n = g.order();
        const Presentation& pres = g.presentation();
        s_ = pres.generators.size();
        t_ = pres.relators.size();

        if (t_ * n * s_ * n > guard_entries_)
            throw guard_error("resolution: presentation too large (" + std::to_string(t_ * n) + "x" +
                              std::to_string(s_ * n) + " syzygy problem)");

        fox_.assign(t_, std::vector<GroupRingElt>(s_, GroupRingElt(n, 0)));
        for (std::size_t j = 0; j < t_; ++j) {
            std::size_t prefix = 0; // group element of the walked prefix
            for (int letter : pres.relators[j]) {
                const std::size_t gi = static_cast<std::size_t>(letter > 0 ? letter : -letter) - 1;
                const std::size_t x = pres.generators[gi];
                if (letter > 0) {
                    fox_[j][gi][prefix] += 1;
                    prefix = g.mult(prefix, x);
                } else {
                    prefix = g.mult(prefix, g.inverse(x));
                    fox_[j][gi][prefix] -= 1;
                }
            }
        }

        // Z-matrices of d1 and d2 in the basis {g e_i}
        d1_matrix_ = IntMatrix(s_ * n, n);
        for (std::size_t i = 0; i < s_; ++i)
            for (std::size_t e = 0; e < n; ++e) {
                d1_matrix_(i * n + e, g.mult(e, pres.generators[i])) += 1;
                d1_matrix_(i * n + e, e) -= 1;
            }
        d2_matrix_ = IntMatrix(t_ * n, s_ * n);
        for (std::size_t j = 0; j < t_; ++j)
            for (std::size_t e = 0; e < n; ++e)
                for (std::size_t i = 0; i < s_; ++i)
                    for (std::size_t h = 0; h < n; ++h) {
                        const Integer& c = fox_[j][i][h];
                        if (c != 0) d2_matrix_(j * n + e, i * n + g.mult(e, h)) += c;
                    }

        if (!(d2_matrix_ * d1_matrix_).is_zero())
            throw inconsistency_error("resolution: d1(d2(x)) != 0");

        // exactness at ZG: the image of d1 is the augmentation ideal
        Lattice im_d1(d1_matrix_);
        for (std::size_t e = 1; e < n; ++e) {
            std::vector<Integer> v(n, 0);
            v[e] = 1;
            v[0] = -1;
            if (!im_d1.contains(v))
                throw inconsistency_error("resolution: generators do not span the augmentation ideal");
        }

        // exactness at ZG^s: ker d1 = im d2 as integer lattices
        IntMatrix ker_d1 = left_kernel(d1_matrix_);
        Lattice im_d2(d2_matrix_);
        for (std::size_t i = 0; i < ker_d1.rows(); ++i)
            if (!im_d2.contains(ker_d1.row(i)))
                throw inconsistency_error(
                    "resolution: relators do not span the relation module (incomplete presentation?)");

        // syzygies: a Z-basis of ker d2 becomes the ZG-generating set for d3
        IntMatrix ker_d2 = left_kernel(d2_matrix_);
        u_ = ker_d2.rows();
        syzygy_.assign(u_, std::vector<GroupRingElt>(t_, GroupRingElt(n, 0)));
        for (std::size_t k = 0; k < u_; ++k)
            for (std::size_t j = 0; j < t_; ++j)
                for (std::size_t e = 0; e < n; ++e) syzygy_[k][j][e] = ker_d2(k, j * n + e);
    }

    const GroupPtr& group() const { return group_; }
    std::size_t generator_count() const { return s_; }
    std::size_t relator_count() const { return t_; }
    std::size_t syzygy_count() const { return u_; }
    const std::vector<std::vector<GroupRingElt>>& fox_coefficients() const { return fox_; }
    const std::vector<std::vector<GroupRingElt>>& syzygies() const { return syzygy_; }
    const IntMatrix& d1_z_matrix() const { return d1_matrix_; }
    const IntMatrix& d2_z_matrix() const { return d2_matrix_; }

    // Hom(d1, M): M -> M^s, m |-> (x_i.m - m)_i
    IntMatrix hom_d1(const GModule& m) const {
        const std::size_t r = m.rank();
        IntMatrix out(r, s_ * r);
        for (std::size_t i = 0; i < s_; ++i) {
            IntMatrix blk = m.action(group_->presentation().generators[i]) - IntMatrix::identity(r);
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t b = 0; b < r; ++b) out(a, i * r + b) = blk(a, b);
        }
        return out;
    }

    // Hom(d2, M): M^s -> M^t via the Fox coefficients
    IntMatrix hom_d2(const GModule& m) const {
        const std::size_t r = m.rank();
        IntMatrix out(s_ * r, t_ * r);
        for (std::size_t j = 0; j < t_; ++j)
            for (std::size_t i = 0; i < s_; ++i) {
                IntMatrix blk = m.group_ring_action(fox_[j][i]);
                for (std::size_t a = 0; a < r; ++a)
                    for (std::size_t b = 0; b < r; ++b) out(i * r + a, j * r + b) = blk(a, b);
            }
        return out;
    }

    // Hom(d3, M): M^t -> M^u via the syzygy coefficients
    IntMatrix hom_d3(const GModule& m) const {
        const std::size_t r = m.rank();
        IntMatrix out(t_ * r, u_ * r);
        for (std::size_t k = 0; k < u_; ++k)
            for (std::size_t j = 0; j < t_; ++j) {
                IntMatrix blk = m.group_ring_action(syzygy_[k][j]);
                for (std::size_t a = 0; a < r; ++a)
                    for (std::size_t b = 0; b < r; ++b) out(j * r + a, k * r + b) = blk(a, b);
            }
        return out;
    }

    IntMatrix cochain_relations(const GModule& m, std::size_t copies) const {
        if (copies == 0) return IntMatrix(0, 0);
        std::vector<IntMatrix> blocks(copies, m.underlying().relations());
        IntMatrix rel = block_diagonal(blocks);
        if (rel.rows() == 0) return IntMatrix(0, copies * m.rank());
        return rel;
    }

private:
    static constexpr std::size_t guard_entries_ = 4'000'000;

    GroupPtr group_;
    std::size_t s_ = 0, t_ = 0, u_ = 0;
    std::vector<std::vector<GroupRingElt>> fox_;
    std::vector<std::vector<GroupRingElt>> syzygy_;
    IntMatrix d1_matrix_;
    IntMatrix d2_matrix_;
};

} // namespace gcoh
