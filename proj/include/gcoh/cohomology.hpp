#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gcoh/resolution.hpp"

namespace gcoh {

// ------------------------------------------------------------------
// cohomology groups with cocycle representatives
// ------------------------------------------------------------------

// A degree-n class is carried by a representative cocycle vector in the
// cochain coordinates of that degree (degree 1: one block of M per group
// generator; degree 2: one block per relator).
struct CohomologyClass {
    std::size_t degree;
    std::vector<Integer> cocycle;
};

class CohomologyGroup {
public:
    CohomologyGroup(std::size_t degree, Subquotient sq) : degree_(degree), sq_(std::move(sq)) {}

    std::size_t degree() const { return degree_; }
    const FgAbelianGroup& group() const { return sq_.group(); }
    const Subquotient& subquotient() const { return sq_; }

    std::vector<Integer> reduce(const std::vector<Integer>& cocycle) const {
        return sq_.coordinates(cocycle);
    }
    CohomologyClass representative(std::size_t i) const {
        return {degree_, sq_.representative(i)};
    }

private:
    std::size_t degree_;
    Subquotient sq_;
};

namespace detail {

inline void size_guard(const GModule& m) {
    const std::size_t n = m.group()->order();
    if (n * n * m.rank() > 1'000'000)
        throw guard_error("cohomology: |G|^2 * rank exceeds 10^6 coordinates");
}

} // namespace detail

inline CohomologyGroup h0_with_reps(const GModule& m) {
    detail::size_guard(m);
    ResolutionComplex res(m.group());
    const std::size_t r = m.rank();
    return CohomologyGroup(
        0, Subquotient(r, m.underlying().relations(), res.hom_d1(m),
                       res.cochain_relations(m, res.generator_count()), IntMatrix(0, r)));
}

inline CohomologyGroup h1_with_reps(const GModule& m, const ResolutionComplex& res) {
    detail::size_guard(m);
    const std::size_t r = m.rank();
    const std::size_t s = res.generator_count();
    return CohomologyGroup(1, Subquotient(s * r, res.cochain_relations(m, s), res.hom_d2(m),
                                          res.cochain_relations(m, res.relator_count()),
                                          res.hom_d1(m)));
}

inline CohomologyGroup h2_with_reps(const GModule& m, const ResolutionComplex& res) {
    detail::size_guard(m);
    const std::size_t r = m.rank();
    const std::size_t t = res.relator_count();
    return CohomologyGroup(2, Subquotient(t * r, res.cochain_relations(m, t), res.hom_d3(m),
                                          res.cochain_relations(m, res.syzygy_count()),
                                          res.hom_d2(m)));
}

inline CohomologyGroup h1_with_reps(const GModule& m) {
    return h1_with_reps(m, ResolutionComplex(m.group()));
}
inline CohomologyGroup h2_with_reps(const GModule& m) {
    return h2_with_reps(m, ResolutionComplex(m.group()));
}

inline FgAbelianGroup h0(const GModule& m) { return h0_with_reps(m).group(); }
inline FgAbelianGroup h1(const GModule& m) { return h1_with_reps(m).group(); }
inline FgAbelianGroup h2(const GModule& m) { return h2_with_reps(m).group(); }

inline FgAbelianGroup cohomology(const GModule& m, std::size_t degree) {
    switch (degree) {
    case 0: return h0(m);
    case 1: return h1(m);
    case 2: return h2(m);
    default: throw input_error("degree capped at 2");
    }
}

// Hom(G, M) for trivial coefficients, computed from invariant factors.
inline FgAbelianGroup hom_from_group(const FiniteGroup& g, const FgAbelianGroup& m) {
    return hom_group(abelianization(g), m);
}

// Periodic description of cyclic-group cohomology, computed straight from
// the action matrices: H^1 = ker(Norm)/im(sigma - 1), H^2 = M^G / Norm(M).
// Independent of the resolution machinery above.
inline FgAbelianGroup cyclic_h_oracle(const GModule& m, std::size_t degree) {
    const FiniteGroup& g = *m.group();
    if (!g.is_cyclic()) throw input_error("cyclic_h_oracle: group is not cyclic");
    if (degree != 1 && degree != 2) throw input_error("cyclic_h_oracle: degree must be 1 or 2");
    const std::size_t r = m.rank();
    const std::size_t sigma = g.order() == 1 ? 0 : g.cyclic_generator();
    IntMatrix norm(r, r);
    {
        std::vector<Integer> all_ones(g.order(), 1);
        norm = m.group_ring_action(all_ones);
    }
    IntMatrix shift = m.action(sigma) - IntMatrix::identity(r);
    const IntMatrix& rel = m.underlying().relations();
    if (degree == 1) return Subquotient(r, rel, norm, rel, shift).group();
    return Subquotient(r, rel, shift, rel, norm).group();
}

// Coefficients that are uniquely divisible have no higher cohomology: the
// groups are killed by |G| yet divisible. The module must carry the flag.
inline FgAbelianGroup rational_vanishing(const GModule& m) {
    if (!m.uniquely_divisible())
        throw input_error("rational_vanishing: module is not flagged uniquely divisible");
    return FgAbelianGroup();
}

// ------------------------------------------------------------------
// homomorphisms between presented groups, in canonical coordinates
// ------------------------------------------------------------------

inline IntMatrix canonical_relations(const FgAbelianGroup& g) {
    IntMatrix rel(g.torsion_count(), g.canonical_dim());
    for (std::size_t i = 0; i < g.torsion_count(); ++i) rel(i, i) = g.invariant_factors()[i];
    return rel;
}

struct GroupHom {
    FgAbelianGroup source;
    FgAbelianGroup target;
    IntMatrix matrix; // canonical_dim(source) x canonical_dim(target)

    FgAbelianGroup kernel() const {
        return Subquotient(source.canonical_dim(), canonical_relations(source), matrix,
                           canonical_relations(target), IntMatrix(0, source.canonical_dim()))
            .group();
    }
    bool is_injective() const { return kernel().is_trivial(); }
    bool is_surjective() const {
        Lattice image(vstack(matrix, canonical_relations(target)));
        for (std::size_t j = 0; j < target.canonical_dim(); ++j) {
            std::vector<Integer> e(target.canonical_dim());
            e[j] = 1;
            if (!image.contains(e)) return false;
        }
        return true;
    }
    bool is_isomorphism() const { return is_injective() && is_surjective(); }
    bool is_zero() const {
        FgAbelianGroup tgt = FgAbelianGroup(target.canonical_dim(), canonical_relations(target));
        for (std::size_t i = 0; i < matrix.rows(); ++i)
            if (!tgt.element_is_zero(matrix.row(i))) return false;
        return true;
    }
};

// im(in) = ker(out), as subgroups of the middle group.
inline bool exact_at(const GroupHom& in, const GroupHom& out) {
    try {
        return Subquotient(out.source.canonical_dim(), canonical_relations(out.source), out.matrix,
                           canonical_relations(out.target), in.matrix)
            .group()
            .is_trivial();
    } catch (const inconsistency_error&) {
        return false; // composite not zero
    }
}

// Map induced on cohomology by an equivariant coefficient map, degree 0-2.
inline GroupHom induced_map(const CohomologyGroup& src, const CohomologyGroup& tgt,
                            const IntMatrix& coefficient_matrix, std::size_t blocks) {
    std::vector<IntMatrix> copies(blocks, coefficient_matrix);
    IntMatrix blockwise = blocks ? block_diagonal(copies)
                                 : IntMatrix(0, 0);
    IntMatrix out(src.group().canonical_dim(), tgt.group().canonical_dim());
    for (std::size_t i = 0; i < src.group().canonical_dim(); ++i) {
        std::vector<Integer> image = src.representative(i).cocycle * blockwise;
        out.set_row(i, tgt.reduce(image));
    }
    return {src.group(), tgt.group(), out};
}

// ------------------------------------------------------------------
// six-term exact sequence of a short exact sequence of modules
// ------------------------------------------------------------------

struct SixTermSequence {
    CohomologyGroup h0a, h0b, h0c, h1a, h1b, h1c, h2a;
    GroupHom map_h0_ab, map_h0_bc, delta0, map_h1_ab, map_h1_bc, delta1;
    bool exact;
};

namespace detail {

// Lift x along [lift_rows; slack_rows] and return the combination restricted
// to the lift rows; used to pull cochains back through surjections.
inline std::vector<Integer> lift_through(const Lattice& stacked, std::size_t lift_count,
                                         const std::vector<Integer>& x, const char* what) {
    auto sol = stacked.solve(x);
    if (!sol) throw inconsistency_error(std::string("six_term: cannot lift through ") + what);
    return std::vector<Integer>(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(lift_count));
}

} // namespace detail

inline SixTermSequence six_term_sequence(const ShortExactSequence& ses) {
    const GModule& a = ses.a;
    const GModule& b = ses.b;
    const GModule& c = ses.c;
    ResolutionComplex res(b.group());
    const std::size_t s = res.generator_count();
    const std::size_t t = res.relator_count();

    CohomologyGroup h0a = h0_with_reps(a), h0b = h0_with_reps(b), h0c = h0_with_reps(c);
    CohomologyGroup h1a = h1_with_reps(a, res), h1b = h1_with_reps(b, res), h1c = h1_with_reps(c, res);
    CohomologyGroup h2a = h2_with_reps(a, res);

    GroupHom m0ab = induced_map(h0a, h0b, ses.inject, 1);
    GroupHom m0bc = induced_map(h0b, h0c, ses.project, 1);
    GroupHom m1ab = induced_map(h1a, h1b, ses.inject, s);
    GroupHom m1bc = induced_map(h1b, h1c, ses.project, s);

    // connecting maps by zigzag: lift along project, apply the coboundary,
    // pull back along inject
    Lattice lift_b(vstack(ses.project, c.underlying().relations()));
    Lattice pull_a(vstack(ses.inject, b.underlying().relations()));
    IntMatrix d0b = res.hom_d1(b);
    IntMatrix d1b = res.hom_d2(b);
    IntMatrix ker_lift = left_kernel(vstack(ses.project, c.underlying().relations()));

    auto pull_back_blocks = [&](const std::vector<Integer>& cochain_b,
                                std::size_t blocks) -> std::vector<Integer> {
        const std::size_t rb = b.rank();
        std::vector<Integer> out;
        out.reserve(blocks * a.rank());
        for (std::size_t blk = 0; blk < blocks; ++blk) {
            std::vector<Integer> piece(cochain_b.begin() + static_cast<std::ptrdiff_t>(blk * rb),
                                       cochain_b.begin() + static_cast<std::ptrdiff_t>((blk + 1) * rb));
            auto back = detail::lift_through(pull_a, a.rank(), piece, "inject");
            for (auto& v : back) out.push_back(std::move(v));
        }
        return out;
    };

    auto connect = [&](const CohomologyGroup& src, const CohomologyGroup& dst, std::size_t in_blocks,
                       const IntMatrix& coboundary, std::size_t out_blocks) -> GroupHom {
        IntMatrix mat(src.group().canonical_dim(), dst.group().canonical_dim());
        for (std::size_t i = 0; i < src.group().canonical_dim(); ++i) {
            std::vector<Integer> rep = src.representative(i).cocycle;
            const std::size_t rc = c.rank();
            const std::size_t rb = b.rank();
            std::vector<Integer> lifted;
            lifted.reserve(in_blocks * rb);
            for (std::size_t blk = 0; blk < in_blocks; ++blk) {
                std::vector<Integer> piece(rep.begin() + static_cast<std::ptrdiff_t>(blk * rc),
                                           rep.begin() + static_cast<std::ptrdiff_t>((blk + 1) * rc));
                auto up = detail::lift_through(lift_b, rb, piece, "project");
                for (auto& v : up) lifted.push_back(std::move(v));
            }
            std::vector<Integer> image = pull_back_blocks(lifted * coboundary, out_blocks);
            mat.set_row(i, dst.reduce(image));

            // well-definedness probe: shift the lift by a kernel element of
            // the projection and check the class does not move
            if (ker_lift.rows() > 0 && in_blocks > 0) {
                std::vector<Integer> shifted = lifted;
                for (std::size_t j = 0; j < rb; ++j) shifted[j] += ker_lift(0, j);
                std::vector<Integer> image2 = pull_back_blocks(shifted * coboundary, out_blocks);
                if (dst.reduce(image2) != mat.row(i))
                    throw inconsistency_error("six_term: connecting map depends on the lift");
            }
        }
        return {src.group(), dst.group(), mat};
    };

    GroupHom delta0 = connect(h0c, h1a, 1, d0b, s);
    GroupHom delta1 = connect(h1c, h2a, s, d1b, t);

    bool exact = m0ab.is_injective() && exact_at(m0ab, m0bc) && exact_at(m0bc, delta0) &&
                 exact_at(delta0, m1ab) && exact_at(m1ab, m1bc) && exact_at(m1bc, delta1);

    return {std::move(h0a), std::move(h0b), std::move(h0c), std::move(h1a),
            std::move(h1b), std::move(h1c), std::move(h2a), std::move(m0ab),
            std::move(m0bc), std::move(delta0), std::move(m1ab), std::move(m1bc),
            std::move(delta1), exact};
}

// ------------------------------------------------------------------
// restriction, inflation, Shapiro
// ------------------------------------------------------------------

inline GModule restricted_module(const GModule& m, const SubgroupView& h) {
    std::vector<IntMatrix> acts;
    acts.reserve(h.mapping.size());
    for (std::size_t e : h.mapping) acts.push_back(m.action(e));
    return GModule(h.group, m.underlying(), std::move(acts));
}

namespace detail {

// Values of a crossed homomorphism on every group element, grown from its
// values on the presentation generators: f(wx) = f(w) + w.f(x).
inline std::vector<std::vector<Integer>> spread_cocycle(const FiniteGroup& g, const GModule& m,
                                                        const std::vector<Integer>& gen_values) {
    const std::size_t r = m.rank();
    const auto& gens = g.presentation().generators;
    std::vector<std::vector<Integer>> f(g.order());
    std::vector<bool> known(g.order(), false);
    f[0].assign(r, 0);
    known[0] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t w = 0; w < g.order(); ++w) {
            if (!known[w]) continue;
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                std::size_t wx = g.mult(w, gens[gi]);
                if (known[wx]) continue;
                std::vector<Integer> gen_val(gen_values.begin() + static_cast<std::ptrdiff_t>(gi * r),
                                             gen_values.begin() +
                                                 static_cast<std::ptrdiff_t>((gi + 1) * r));
                f[wx] = f[w] + gen_val * m.action(w);
                known[wx] = true;
                grew = true;
            }
        }
    }
    for (bool k : known)
        if (!k) throw inconsistency_error("spread_cocycle: generators do not reach every element");
    return f;
}

} // namespace detail

struct RestrictionResult {
    CohomologyGroup source; // H^deg(G, M)
    CohomologyGroup target; // H^deg(H, Res M)
    GroupHom map;
};

inline RestrictionResult restriction(const GModule& m, const std::vector<std::size_t>& subgroup,
                                     std::size_t degree) {
    if (degree != 1 && degree != 2) throw input_error("restriction: degree must be 1 or 2");
    const FiniteGroup& g = *m.group();
    SubgroupView h = subgroup_as_group(g, subgroup);
    GModule resm = restricted_module(m, h);
    ResolutionComplex res_g(m.group());
    ResolutionComplex res_h(h.group);

    CohomologyGroup src = degree == 1 ? h1_with_reps(m, res_g) : h2_with_reps(m, res_g);
    CohomologyGroup tgt = degree == 1 ? h1_with_reps(resm, res_h) : h2_with_reps(resm, res_h);
    const std::size_t r = m.rank();

    IntMatrix mat(src.group().canonical_dim(), tgt.group().canonical_dim());

    if (degree == 1) {
        for (std::size_t i = 0; i < src.group().canonical_dim(); ++i) {
            auto full = detail::spread_cocycle(g, m, src.representative(i).cocycle);
            std::vector<Integer> restricted;
            for (std::size_t hg : h.group->presentation().generators) {
                const auto& val = full[h.mapping[hg]];
                restricted.insert(restricted.end(), val.begin(), val.end());
            }
            mat.set_row(i, tgt.reduce(restricted));
        }
        return {std::move(src), std::move(tgt), GroupHom{src.group(), tgt.group(), mat}};
    }

    // degree 2: build a chain map lambda from the H-resolution to the
    // G-resolution over ZH and precompose representatives with it
    const std::size_t n = g.order();
    const std::size_t nh = h.group->order();
    const std::size_t sg = res_g.generator_count();
    Lattice d1g_lattice(res_g.d1_z_matrix());
    Lattice d2g_lattice(res_g.d2_z_matrix());

    // lambda1 on basis: solve d1(xi_i) = h_i - 1 in ZG
    std::vector<std::vector<Integer>> lambda1;
    for (std::size_t hg : h.group->presentation().generators) {
        std::vector<Integer> rhs(n, 0);
        rhs[h.mapping[hg]] += 1;
        rhs[0] -= 1;
        auto sol = d1g_lattice.solve(rhs);
        if (!sol) throw inconsistency_error("restriction: cannot lift a subgroup generator");
        lambda1.push_back(*sol);
    }
    // lambda1 as a Z-matrix ZH^{s_H} -> ZG^{s_G}
    const std::size_t sh = res_h.generator_count();
    IntMatrix l1(sh * nh, sg * n);
    for (std::size_t i = 0; i < sh; ++i)
        for (std::size_t eh = 0; eh < nh; ++eh) {
            const std::size_t parent = h.mapping[eh];
            // left-multiply lambda1[i] by parent, blockwise
            for (std::size_t blk = 0; blk < sg; ++blk)
                for (std::size_t e = 0; e < n; ++e) {
                    const Integer& v = lambda1[i][blk * n + e];
                    if (v != 0) l1(i * nh + eh, blk * n + g.mult(parent, e)) += v;
                }
        }
    // lambda2 on basis: solve d2(xi_j) = lambda1(d2_H(e_j))
    const std::size_t th = res_h.relator_count();
    std::vector<std::vector<Integer>> lambda2;
    for (std::size_t j = 0; j < th; ++j) {
        std::vector<Integer> rho(sh * nh, 0);
        for (std::size_t i = 0; i < sh; ++i)
            for (std::size_t eh = 0; eh < nh; ++eh)
                rho[i * nh + eh] = res_h.fox_coefficients()[j][i][eh];
        std::vector<Integer> rhs = rho * l1;
        auto sol = d2g_lattice.solve(rhs);
        if (!sol) throw inconsistency_error("restriction: cannot lift a subgroup relator");
        lambda2.push_back(*sol);
    }

    const std::size_t tg = res_g.relator_count();
    for (std::size_t i = 0; i < src.group().canonical_dim(); ++i) {
        std::vector<Integer> rep = src.representative(i).cocycle; // t_G blocks of size r
        std::vector<Integer> out;
        out.reserve(th * r);
        for (std::size_t j = 0; j < th; ++j) {
            std::vector<Integer> val(r, 0);
            for (std::size_t jp = 0; jp < tg; ++jp)
                for (std::size_t e = 0; e < n; ++e) {
                    const Integer& cft = lambda2[j][jp * n + e];
                    if (cft == 0) continue;
                    std::vector<Integer> z(rep.begin() + static_cast<std::ptrdiff_t>(jp * r),
                                           rep.begin() + static_cast<std::ptrdiff_t>((jp + 1) * r));
                    std::vector<Integer> moved = z * m.action(e);
                    for (std::size_t q = 0; q < r; ++q) val[q] += cft * moved[q];
                }
            out.insert(out.end(), val.begin(), val.end());
        }
        mat.set_row(i, tgt.reduce(out));
    }
    return {std::move(src), std::move(tgt), GroupHom{src.group(), tgt.group(), mat}};
}

// M^N as a module over G/N, together with the embedding of its lattice.
struct FixedModule {
    QuotientView quotient;
    GModule module;   // over quotient.group
    IntMatrix embedding; // basis rows of the fixed lattice inside M's ambient
};

inline FixedModule fixed_module(const GModule& m, const std::vector<std::size_t>& normal) {
    const FiniteGroup& g = *m.group();
    QuotientView q = quotient_group(g, normal);
    Subquotient fixed = invariants_subquotient(m, normal);
    IntMatrix basis = fixed.kernel_basis();
    Lattice basis_lattice(basis);

    const std::size_t f = basis.rows();
    std::vector<IntMatrix> acts;
    for (std::size_t cidx = 0; cidx < q.group->order(); ++cidx) {
        std::size_t rep = q.coset_reps[cidx];
        IntMatrix act(f, f);
        for (std::size_t i = 0; i < f; ++i) {
            auto moved = basis.row(i) * m.action(rep);
            auto sol = basis_lattice.solve(moved);
            if (!sol) throw inconsistency_error("fixed_module: fixed lattice is not stable");
            act.set_row(i, *sol);
        }
        acts.push_back(std::move(act));
    }
    GModule over_q(q.group, fixed.group().ambient_rank() == f
                                ? FgAbelianGroup(f, fixed.group().relations())
                                : fixed.group(),
                   std::move(acts));
    return {std::move(q), std::move(over_q), std::move(basis)};
}

struct InflationResult {
    CohomologyGroup source; // H^1(G/N, M^N)
    CohomologyGroup target; // H^1(G, M)
    GroupHom map;
};

inline InflationResult inflation(const GModule& m, const std::vector<std::size_t>& normal) {
    const FiniteGroup& g = *m.group();
    FixedModule fm = fixed_module(m, normal);
    CohomologyGroup src = h1_with_reps(fm.module);
    CohomologyGroup tgt = h1_with_reps(m);
    const std::size_t r = m.rank();

    IntMatrix mat(src.group().canonical_dim(), tgt.group().canonical_dim());
    for (std::size_t i = 0; i < src.group().canonical_dim(); ++i) {
        auto full = detail::spread_cocycle(*fm.quotient.group, fm.module,
                                           src.representative(i).cocycle);
        std::vector<Integer> inflated;
        inflated.reserve(g.presentation().generators.size() * r);
        for (std::size_t xg : g.presentation().generators) {
            std::vector<Integer> val = full[fm.quotient.projection[xg]] * fm.embedding;
            inflated.insert(inflated.end(), val.begin(), val.end());
        }
        mat.set_row(i, tgt.reduce(inflated));
    }
    return {std::move(src), std::move(tgt), GroupHom{src.group(), tgt.group(), mat}};
}

struct ShapiroCheck {
    FgAbelianGroup h1_induced;
    FgAbelianGroup h1_over_subgroup;
    bool isomorphic;
};

inline ShapiroCheck shapiro_check(GroupPtr g, const std::vector<std::size_t>& subgroup,
                                  const GModule& m) {
    GModule ind = induced_module(g, subgroup, m);
    FgAbelianGroup lhs = h1(ind);
    FgAbelianGroup rhs = h1(m);
    return {lhs, rhs, lhs == rhs};
}

} // namespace gcoh
