#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gcoh/finite_group.hpp"

namespace gcoh {

// A finite group acting by integer matrices on a presented abelian group.
// Row-vector convention: g.x is x * action(g), so action(gh) = action(h) *
// action(g). Construction verifies the identity, the multiplication law
// modulo the relation lattice, and that every action matrix preserves the
// relation lattice.
class GModule {
public:
    GModule(GroupPtr group, FgAbelianGroup underlying, std::vector<IntMatrix> actions,
            bool uniquely_divisible = false)
        : group_(std::move(group)), underlying_(std::move(underlying)), actions_(std::move(actions)),
          uniquely_divisible_(uniquely_divisible) {
        verify();
    }

    const GroupPtr& group() const { return group_; }
    const FgAbelianGroup& underlying() const { return underlying_; }
    std::size_t rank() const { return underlying_.ambient_rank(); }
    const IntMatrix& action(std::size_t g) const { return actions_[g]; }
    bool uniquely_divisible() const { return uniquely_divisible_; }

    GModule flagged_uniquely_divisible() const {
        return GModule(group_, underlying_, actions_, true);
    }

    // Action of a group-ring element sum_g coeffs[g] * g as a single matrix.
    IntMatrix group_ring_action(const std::vector<Integer>& coeffs) const {
        IntMatrix m(rank(), rank());
        for (std::size_t g = 0; g < group_->order(); ++g) {
            if (coeffs[g] == 0) continue;
            for (std::size_t i = 0; i < rank(); ++i)
                for (std::size_t j = 0; j < rank(); ++j) {
                    const Integer& e = actions_[g](i, j);
                    if (e != 0) m(i, j) += coeffs[g] * e;
                }
        }
        return m;
    }

private:
    void verify() const {
        const std::size_t n = group_->order();
        const std::size_t r = rank();
        if (actions_.size() != n) throw inconsistency_error("GModule: one action matrix per element required");
        for (const auto& a : actions_)
            if (a.rows() != r || a.cols() != r)
                throw inconsistency_error("GModule: action matrix has wrong shape");
        const Lattice& rel = underlying_.relation_lattice();
        IntMatrix id = IntMatrix::identity(r);
        for (std::size_t i = 0; i < r; ++i)
            if (!underlying_.element_is_zero(actions_[0].row(i) - id.row(i)))
                throw inconsistency_error("GModule: identity does not act trivially");
        for (std::size_t g = 0; g < n; ++g) {
            IntMatrix moved = underlying_.relations() * actions_[g];
            for (std::size_t i = 0; i < moved.rows(); ++i)
                if (!rel.contains(moved.row(i)))
                    throw inconsistency_error("GModule: action of element " + std::to_string(g) +
                                              " does not preserve the relation lattice");
        }
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t h = 0; h < n; ++h) {
                IntMatrix lhs = actions_[h] * actions_[g];
                const IntMatrix& rhs = actions_[group_->mult(g, h)];
                for (std::size_t i = 0; i < r; ++i)
                    if (!underlying_.element_is_zero(lhs.row(i) - rhs.row(i)))
                        throw inconsistency_error("GModule: action is not multiplicative at pair (" +
                                                  std::to_string(g) + "," + std::to_string(h) + ")");
            }
    }

    GroupPtr group_;
    FgAbelianGroup underlying_;
    std::vector<IntMatrix> actions_;
    bool uniquely_divisible_;
};

inline GModule trivial_module(GroupPtr g, FgAbelianGroup m) {
    std::vector<IntMatrix> acts(g->order(), IntMatrix::identity(m.ambient_rank()));
    return GModule(std::move(g), std::move(m), std::move(acts));
}

inline GModule zero_module(GroupPtr g) { return trivial_module(std::move(g), FgAbelianGroup()); }

// ZG with the left regular action: g permutes the basis e_h -> e_{gh}.
inline GModule regular_module(GroupPtr g) {
    const std::size_t n = g->order();
    std::vector<IntMatrix> acts;
    acts.reserve(n);
    for (std::size_t a = 0; a < n; ++a) {
        IntMatrix m(n, n);
        for (std::size_t h = 0; h < n; ++h) m(h, g->mult(a, h)) = 1;
        acts.push_back(std::move(m));
    }
    return GModule(std::move(g), FgAbelianGroup::free_group(n), std::move(acts));
}

// Z with the nontrivial element of C2 acting as -1. Only n = 2 exists here.
inline GModule negation_lattice(std::size_t n) {
    if (n != 2) throw input_error("negation_lattice: only n = 2 is supported");
    auto c2 = cyclic_group(2);
    std::vector<IntMatrix> acts{IntMatrix{{1}}, IntMatrix{{-1}}};
    return GModule(std::move(c2), FgAbelianGroup::free_group(1), std::move(acts));
}

// An integer matrix map between modules that commutes with the actions and
// descends to the quotients.
struct EquivariantMap {
    GModule source;
    GModule target;
    IntMatrix matrix; // rank(source) x rank(target), applied as x -> x * matrix

    EquivariantMap(GModule src, GModule tgt, IntMatrix m)
        : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
        if (matrix.rows() != source.rank() || matrix.cols() != target.rank())
            throw inconsistency_error("EquivariantMap: matrix shape mismatch");
        const Lattice& trel = target.underlying().relation_lattice();
        IntMatrix moved = source.underlying().relations() * matrix;
        for (std::size_t i = 0; i < moved.rows(); ++i)
            if (!trel.contains(moved.row(i)))
                throw inconsistency_error("EquivariantMap: relations are not mapped into relations");
        for (std::size_t g = 0; g < source.group()->order(); ++g) {
            IntMatrix lhs = source.action(g) * matrix;
            IntMatrix rhs = matrix * target.action(g);
            for (std::size_t i = 0; i < lhs.rows(); ++i)
                if (!target.underlying().element_is_zero(lhs.row(i) - rhs.row(i)))
                    throw inconsistency_error("EquivariantMap: does not commute with element " +
                                              std::to_string(g));
        }
    }
};

// 0 -> A -> B -> C -> 0 with equivariant inject/project, exactness verified.
struct ShortExactSequence {
    GModule a, b, c;
    IntMatrix inject;  // rank(a) x rank(b)
    IntMatrix project; // rank(b) x rank(c)

    ShortExactSequence(GModule a_, GModule b_, GModule c_, IntMatrix inj, IntMatrix proj)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), inject(std::move(inj)),
          project(std::move(proj)) {
        EquivariantMap check_inj(a, b, inject);
        EquivariantMap check_proj(b, c, project);

        // injectivity of A -> B
        IntMatrix none(0, a.rank());
        Subquotient ker_inj(a.rank(), a.underlying().relations(), inject,
                            b.underlying().relations(), none);
        if (!ker_inj.group().is_trivial())
            throw inconsistency_error("ShortExactSequence: inject has a kernel");

        // surjectivity of B -> C
        Lattice image(vstack(project, c.underlying().relations()));
        for (std::size_t j = 0; j < c.rank(); ++j) {
            std::vector<Integer> e(c.rank());
            e[j] = 1;
            if (!image.contains(e))
                throw inconsistency_error("ShortExactSequence: project is not surjective");
        }

        // im(inject) = ker(project) inside B
        Subquotient ker_proj(b.rank(), IntMatrix(0, b.rank()), project, c.underlying().relations(),
                             IntMatrix(0, b.rank()));
        Lattice ker_lattice(vstack(ker_proj.kernel_basis(), b.underlying().relations()));
        Lattice im_lattice(vstack(inject, b.underlying().relations()));
        if (!lattices_equal(ker_lattice, im_lattice))
            throw inconsistency_error("ShortExactSequence: image of inject differs from kernel of project");
    }
};

// ZG -> L with L = ZG / <norm element>, packaged with its exact sequence
// 0 -> Z -> ZG -> L -> 0 where Z carries the trivial action and 1 maps to
// the sum of all group elements. L is free of rank |G| - 1.
struct CoaugmentationQuotient {
    GModule l;
    ShortExactSequence sequence;
};

inline CoaugmentationQuotient coaugmentation_quotient(GroupPtr g) {
    const std::size_t n = g->order();
    GModule zg = regular_module(g);
    IntMatrix norm(1, n);
    for (std::size_t j = 0; j < n; ++j) norm(0, j) = 1;
    std::vector<IntMatrix> acts;
    for (std::size_t a = 0; a < n; ++a) acts.push_back(zg.action(a));
    GModule l(g, FgAbelianGroup(n, norm), std::move(acts));
    GModule z = trivial_module(g, FgAbelianGroup::free_group(1));
    ShortExactSequence ses(z, zg, l, norm, IntMatrix::identity(n));
    return {std::move(l), std::move(ses)};
}

inline GModule direct_sum(const std::vector<GModule>& parts) {
    if (parts.empty()) throw input_error("direct_sum: needs at least one module");
    GroupPtr g = parts.front().group();
    for (const auto& p : parts)
        if (p.group()->table() != g->table())
            throw input_error("direct_sum: modules live over different groups");
    FgAbelianGroup under = parts.front().underlying();
    for (std::size_t i = 1; i < parts.size(); ++i) under = direct_sum(under, parts[i].underlying());
    std::vector<IntMatrix> acts;
    for (std::size_t e = 0; e < g->order(); ++e) {
        std::vector<IntMatrix> blocks;
        blocks.reserve(parts.size());
        for (const auto& p : parts) blocks.push_back(p.action(e));
        acts.push_back(block_diagonal(blocks));
    }
    return GModule(std::move(g), std::move(under), std::move(acts));
}

// Ind_H^G M: one copy of M per left coset of H, permuted by G and twisted
// by the H-action. Coset representatives are the smallest element index in
// each coset.
inline GModule induced_module(GroupPtr g, const std::vector<std::size_t>& subgroup,
                              const GModule& m) {
    SubgroupView h = subgroup_as_group(*g, subgroup);
    if (m.group()->table() != h.group->table())
        throw input_error("induced_module: module is not over the given subgroup");
    const std::size_t n = g->order();
    std::vector<std::size_t> coset_of(n, n), reps;
    for (std::size_t x = 0; x < n; ++x) {
        if (coset_of[x] != n) continue;
        coset_of[x] = reps.size();
        for (std::size_t e : h.mapping) coset_of[g->mult(x, e)] = reps.size();
        reps.push_back(x);
    }
    const std::size_t k = reps.size();
    const std::size_t r = m.rank();
    std::map<std::size_t, std::size_t> h_pos;
    for (std::size_t i = 0; i < h.mapping.size(); ++i) h_pos[h.mapping[i]] = i;

    std::vector<IntMatrix> rel_blocks(k, m.underlying().relations());
    IntMatrix rels = block_diagonal(rel_blocks);
    IntMatrix fixed_rels(rels.rows(), k * r);
    for (std::size_t i = 0; i < rels.rows(); ++i)
        for (std::size_t j = 0; j < rels.cols(); ++j) fixed_rels(i, j) = rels(i, j);

    std::vector<IntMatrix> acts;
    for (std::size_t a = 0; a < n; ++a) {
        IntMatrix act(k * r, k * r);
        for (std::size_t c = 0; c < k; ++c) {
            std::size_t moved = g->mult(a, reps[c]);
            std::size_t c2 = coset_of[moved];
            std::size_t twist = g->mult(g->inverse(reps[c2]), moved); // in H
            const IntMatrix& hm = m.action(h_pos.at(twist));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) act(c * r + i, c2 * r + j) = hm(i, j);
        }
        acts.push_back(std::move(act));
    }
    return GModule(std::move(g), FgAbelianGroup(k * r, fixed_rels), std::move(acts));
}

// The subgroup of invariants M^S for a subset S of the group (all of G by
// default), as an abstract presented group.
inline Subquotient invariants_subquotient(const GModule& m, const std::vector<std::size_t>& subset) {
    const std::size_t r = m.rank();
    std::vector<IntMatrix> diffs, target_rels;
    for (std::size_t s : subset) {
        if (s == 0) continue;
        diffs.push_back(m.action(s) - IntMatrix::identity(r));
        target_rels.push_back(m.underlying().relations());
    }
    if (diffs.empty()) {
        // trivial constraint: everything is fixed
        return Subquotient(r, m.underlying().relations(), IntMatrix(r, 0), IntMatrix(0, 0),
                           IntMatrix(0, r));
    }
    IntMatrix f = diffs.front();
    for (std::size_t i = 1; i < diffs.size(); ++i) f = hstack(f, diffs[i]);
    return Subquotient(r, m.underlying().relations(), f, block_diagonal(target_rels),
                       IntMatrix(0, r));
}

inline FgAbelianGroup fixed_points(const GModule& m) {
    std::vector<std::size_t> all(m.group()->order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return invariants_subquotient(m, all).group();
}

// Quotient of M by the G-stable lattice generated by the orbit of the given
// rows; always well-defined because the extra relations are saturated under
// the action first.
inline GModule quotient_module(const GModule& m, const IntMatrix& extra_rows) {
    IntMatrix orbit(0, m.rank());
    for (std::size_t i = 0; i < extra_rows.rows(); ++i) {
        IntMatrix one_orbit(m.group()->order(), m.rank());
        for (std::size_t g = 0; g < m.group()->order(); ++g)
            one_orbit.set_row(g, extra_rows.row(i) * m.action(g));
        orbit = vstack(orbit, one_orbit);
    }
    std::vector<IntMatrix> acts;
    for (std::size_t g = 0; g < m.group()->order(); ++g) acts.push_back(m.action(g));
    return GModule(m.group(), FgAbelianGroup(m.rank(), vstack(m.underlying().relations(), orbit)),
                   std::move(acts));
}

} // namespace gcoh
