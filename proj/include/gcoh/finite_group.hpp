#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "gcoh/fg_abelian.hpp"

namespace gcoh {

// A word in the generators of a presentation: letter +i is generator i-1,
// letter -i its inverse (1-based so that 0 never appears).
using Word = std::vector<int>;

struct Presentation {
    std::vector<std::size_t> generators; // element indices
    std::vector<Word> relators;
};

// A finite group given by its full multiplication table. Element 0 is the
// identity. The table is checked on construction; every instance carries a
// presentation (small hand-picked ones for the built-in families, the
// multiplication-table presentation otherwise).
class FiniteGroup {
public:
    FiniteGroup(std::string name, std::vector<std::vector<std::size_t>> table, Presentation pres)
        : name_(std::move(name)), table_(std::move(table)), presentation_(std::move(pres)) {
        verify_table();
        build_inverses();
        verify_presentation();
    }

    std::size_t order() const { return table_.size(); }
    const std::string& name() const { return name_; }
    std::size_t mult(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }
    const Presentation& presentation() const { return presentation_; }

    std::size_t element_order(std::size_t g) const {
        std::size_t k = 1, x = g;
        while (x != 0) {
            x = mult(x, g);
            ++k;
        }
        return k;
    }

    bool is_abelian() const {
        for (std::size_t a = 0; a < order(); ++a)
            for (std::size_t b = a + 1; b < order(); ++b)
                if (mult(a, b) != mult(b, a)) return false;
        return true;
    }

    // Index of an element of maximal order n = |G| if the group is cyclic.
    std::size_t cyclic_generator() const {
        for (std::size_t g = 0; g < order(); ++g)
            if (element_order(g) == order()) return g;
        throw input_error("group '" + name_ + "' is not cyclic");
    }
    bool is_cyclic() const {
        for (std::size_t g = 0; g < order(); ++g)
            if (element_order(g) == order()) return true;
        return false;
    }

    std::size_t evaluate_word(const Word& w) const {
        std::size_t x = 0;
        for (int letter : w) {
            if (letter == 0) throw input_error("word contains letter 0");
            std::size_t gi = static_cast<std::size_t>(letter > 0 ? letter : -letter) - 1;
            if (gi >= presentation_.generators.size()) throw input_error("word letter out of range");
            std::size_t g = presentation_.generators[gi];
            x = mult(x, letter > 0 ? g : inverse(g));
        }
        return x;
    }

    std::vector<std::size_t> subgroup_closure(std::vector<std::size_t> seeds) const {
        std::set<std::size_t> h{0};
        for (std::size_t s : seeds) h.insert(s);
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::size_t> cur(h.begin(), h.end());
            for (std::size_t a : cur)
                for (std::size_t b : cur)
                    if (h.insert(mult(a, b)).second) grew = true;
        }
        return {h.begin(), h.end()};
    }

    bool is_subgroup(const std::vector<std::size_t>& subset) const {
        std::set<std::size_t> h(subset.begin(), subset.end());
        if (!h.count(0)) return false;
        for (std::size_t a : subset)
            for (std::size_t b : subset)
                if (!h.count(mult(a, b))) return false;
        return true;
    }

    bool is_normal(const std::vector<std::size_t>& subgroup) const {
        std::set<std::size_t> h(subgroup.begin(), subgroup.end());
        for (std::size_t g = 0; g < order(); ++g)
            for (std::size_t n : subgroup)
                if (!h.count(mult(mult(g, n), inverse(g)))) return false;
        return true;
    }

    std::vector<std::size_t> commutator_subgroup() const {
        std::vector<std::size_t> comms;
        for (std::size_t a = 0; a < order(); ++a)
            for (std::size_t b = 0; b < order(); ++b)
                comms.push_back(mult(mult(a, b), mult(inverse(a), inverse(b))));
        return subgroup_closure(comms);
    }

private:
    void verify_table() {
        const std::size_t n = table_.size();
        if (n == 0) throw inconsistency_error("group table is empty");
        for (const auto& row : table_) {
            if (row.size() != n) throw inconsistency_error("group table is not square");
            for (std::size_t e : row)
                if (e >= n) throw inconsistency_error("group table entry out of range");
        }
        for (std::size_t a = 0; a < n; ++a)
            if (table_[0][a] != a || table_[a][0] != a)
                throw inconsistency_error("element 0 is not an identity");
        for (std::size_t a = 0; a < n; ++a) {
            std::vector<bool> seen_row(n, false), seen_col(n, false);
            for (std::size_t b = 0; b < n; ++b) {
                if (seen_row[table_[a][b]] || seen_col[table_[b][a]])
                    throw inconsistency_error("group table is not a latin square");
                seen_row[table_[a][b]] = seen_col[table_[b][a]] = true;
            }
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                        throw inconsistency_error("group table is not associative");
    }

    void build_inverses() {
        inverse_.assign(order(), 0);
        for (std::size_t a = 0; a < order(); ++a)
            for (std::size_t b = 0; b < order(); ++b)
                if (table_[a][b] == 0) inverse_[a] = b;
    }

    void verify_presentation() const {
        for (std::size_t g : presentation_.generators)
            if (g >= order()) throw inconsistency_error("presentation generator out of range");
        for (const Word& r : presentation_.relators)
            if (evaluate_word(r) != 0)
                throw inconsistency_error("presentation relator does not evaluate to the identity");
        std::vector<std::size_t> gen(presentation_.generators.begin(), presentation_.generators.end());
        if (subgroup_closure(gen).size() != order())
            throw inconsistency_error("presentation generators do not generate the group");
    }

    std::string name_;
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> inverse_;
    Presentation presentation_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

namespace detail {

inline Presentation multiplication_table_presentation(
    const std::vector<std::vector<std::size_t>>& table) {
    const std::size_t n = table.size();
    Presentation p;
    for (std::size_t g = 1; g < n; ++g) p.generators.push_back(g);
    for (std::size_t g = 1; g < n; ++g)
        for (std::size_t h = 1; h < n; ++h) {
            Word w{static_cast<int>(g), static_cast<int>(h)};
            std::size_t gh = table[g][h];
            if (gh != 0) w.push_back(-static_cast<int>(gh));
            p.relators.push_back(std::move(w));
        }
    return p;
}

inline Word power_word(int letter, std::size_t n) {
    return Word(n, letter);
}

} // namespace detail

inline GroupPtr group_from_table(std::string name, std::vector<std::vector<std::size_t>> table) {
    Presentation pres = detail::multiplication_table_presentation(table);
    return std::make_shared<const FiniteGroup>(std::move(name), std::move(table), std::move(pres));
}

inline GroupPtr cyclic_group(std::size_t n) {
    if (n < 1) throw input_error("cyclic(n) needs n >= 1");
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    Presentation pres;
    if (n > 1) {
        pres.generators = {1};
        pres.relators = {detail::power_word(1, n)};
    }
    return std::make_shared<const FiniteGroup>("C" + std::to_string(n), std::move(table),
                                               std::move(pres));
}

// Order 2n; element r^i s^j has index i + n*j.
inline GroupPtr dihedral_group(std::size_t n) {
    if (n < 1) throw input_error("dihedral(n) needs n >= 1");
    const std::size_t order = 2 * n;
    auto idx = [n](std::size_t i, std::size_t j) { return i + n * j; };
    std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
    for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t j1 = 0; j1 < 2; ++j1)
            for (std::size_t i2 = 0; i2 < n; ++i2)
                for (std::size_t j2 = 0; j2 < 2; ++j2) {
                    std::size_t i = j1 ? (i1 + n - i2 % n) % n : (i1 + i2) % n;
                    table[idx(i1, j1)][idx(i2, j2)] = idx(i, j1 ^ j2);
                }
    Presentation pres;
    if (n == 1) {
        pres.generators = {idx(0, 1)};
        pres.relators = {detail::power_word(1, 2)};
    } else {
        pres.generators = {idx(1, 0), idx(0, 1)}; // r, s
        pres.relators = {detail::power_word(1, n), detail::power_word(2, 2), Word{1, 2, 1, 2}};
    }
    return std::make_shared<const FiniteGroup>("D" + std::to_string(n), std::move(table),
                                               std::move(pres));
}

namespace detail {

inline std::vector<std::vector<std::size_t>> permutations_lex(std::size_t m) {
    std::vector<std::size_t> p(m);
    for (std::size_t i = 0; i < m; ++i) p[i] = i;
    std::vector<std::vector<std::size_t>> all;
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return all;
}

} // namespace detail

// Permutations of {0..m-1} in lexicographic order (the identity comes
// first), composed as functions: (g*h)(x) = g(h(x)).
inline GroupPtr symmetric_group(std::size_t m) {
    if (m != 3 && m != 4) throw input_error("symmetric(n) supports n = 3 or 4");
    auto perms = detail::permutations_lex(m);
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
    const std::size_t n = perms.size();
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<std::size_t> c(m);
            for (std::size_t x = 0; x < m; ++x) c[x] = perms[a][perms[b][x]];
            table[a][b] = index[c];
        }
    Presentation pres;
    if (m == 3) {
        // a = (0 1 2), b = (0 1)
        pres.generators = {index[{1, 2, 0}], index[{1, 0, 2}]};
        pres.relators = {detail::power_word(1, 3), detail::power_word(2, 2), Word{1, 2, 1, 2}};
    } else {
        // a = (0 1 2 3), b = (0 1); (ab)^3 = 1
        pres.generators = {index[{1, 2, 3, 0}], index[{1, 0, 2, 3}]};
        pres.relators = {detail::power_word(1, 4), detail::power_word(2, 2),
                         Word{1, 2, 1, 2, 1, 2}};
    }
    return std::make_shared<const FiniteGroup>("S" + std::to_string(m), std::move(table),
                                               std::move(pres));
}

// {1, i, j, k, -1, -i, -j, -k} with indices 0..7.
inline GroupPtr quaternion_group() {
    // sign * axis encoding: axis 0 = scalar, 1..3 = i, j, k
    auto axis_mult = [](std::size_t a, std::size_t b) -> std::pair<int, std::size_t> {
        if (a == 0) return {1, b};
        if (b == 0) return {1, a};
        if (a == b) return {-1, 0};
        // i*j=k, j*k=i, k*i=j and anticommutativity
        static const std::size_t third[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
        bool forward = (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1);
        return {forward ? 1 : -1, third[a][b]};
    };
    auto idx = [](int sign, std::size_t axis) { return axis + (sign < 0 ? 4 : 0); };
    std::vector<std::vector<std::size_t>> table(8, std::vector<std::size_t>(8));
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 0; b < 8; ++b) {
            int sa = a < 4 ? 1 : -1, sb = b < 4 ? 1 : -1;
            auto [s, axis] = axis_mult(a % 4, b % 4);
            table[a][b] = idx(sa * sb * s, axis);
        }
    Presentation pres;
    pres.generators = {1, 2}; // i, j
    pres.relators = {detail::power_word(1, 4), Word{1, 1, -2, -2}, Word{-2, 1, 2, 1}};
    return std::make_shared<const FiniteGroup>("Q8", std::move(table), std::move(pres));
}

// The spec'd constructor fleet: cyclic(n), dihedral(n), symmetric(3),
// symmetric(4), quaternion8.
inline GroupPtr builtin_group(const std::string& name) {
    auto starts = [&](const char* p) { return name.rfind(p, 0) == 0; };
    try {
        if (starts("cyclic(") && name.back() == ')')
            return cyclic_group(std::stoul(name.substr(7)));
        if (starts("dihedral(") && name.back() == ')')
            return dihedral_group(std::stoul(name.substr(9)));
        if (name == "symmetric(3)") return symmetric_group(3);
        if (name == "symmetric(4)") return symmetric_group(4);
        if (name == "quaternion8") return quaternion_group();
        // short aliases: C5, D4, S3, S4, Q8
        if (name == "Q8") return quaternion_group();
        if (name.size() >= 2 && name[0] == 'C') return cyclic_group(std::stoul(name.substr(1)));
        if (name.size() >= 2 && name[0] == 'D') return dihedral_group(std::stoul(name.substr(1)));
        if (name.size() == 2 && name[0] == 'S') return symmetric_group(std::stoul(name.substr(1)));
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
    throw input_error("unknown group name: " + name);
}

// Subgroup as its own FiniteGroup; mapping[i] is the index in the parent of
// the subgroup's element i.
struct SubgroupView {
    GroupPtr group;
    std::vector<std::size_t> mapping;
};

inline SubgroupView subgroup_as_group(const FiniteGroup& g, std::vector<std::size_t> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (!g.is_subgroup(subset)) throw input_error("subset is not closed under multiplication");
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t i = 0; i < subset.size(); ++i) pos[subset[i]] = i;
    const std::size_t n = subset.size();
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table[a][b] = pos[g.mult(subset[a], subset[b])];

    Presentation pres;
    // prefer the one-relator cyclic presentation when available
    std::size_t cyc = n;
    for (std::size_t h = 1; h < n && cyc == n; ++h) {
        std::size_t k = 1, x = h;
        while (x != 0) {
            x = table[x][h];
            ++k;
        }
        if (k == n) cyc = h;
    }
    if (n > 1 && cyc != n) {
        pres.generators = {cyc};
        pres.relators = {detail::power_word(1, n)};
    } else {
        pres = detail::multiplication_table_presentation(table);
    }
    auto grp = std::make_shared<const FiniteGroup>(g.name() + "-sub" + std::to_string(n),
                                                   std::move(table), std::move(pres));
    return {grp, std::move(subset)};
}

// Quotient by a verified normal subgroup; projection[g] is the index of the
// coset of g. Cosets are indexed by increasing smallest member, so the
// identity coset is 0.
struct QuotientView {
    GroupPtr group;
    std::vector<std::size_t> projection;
    std::vector<std::size_t> coset_reps;
};

inline QuotientView quotient_group(const FiniteGroup& g, const std::vector<std::size_t>& normal) {
    if (!g.is_subgroup(normal)) throw input_error("quotient: subset is not a subgroup");
    if (!g.is_normal(normal)) throw input_error("quotient: subgroup is not normal");
    std::vector<std::size_t> coset_of(g.order(), g.order());
    std::vector<std::size_t> reps;
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (coset_of[x] != g.order()) continue;
        std::size_t c = reps.size();
        reps.push_back(x);
        for (std::size_t n : normal) coset_of[g.mult(x, n)] = c;
    }
    const std::size_t m = reps.size();
    std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) table[a][b] = coset_of[g.mult(reps[a], reps[b])];
    auto grp = group_from_table(g.name() + "/N", std::move(table));
    return {grp, std::move(coset_of), std::move(reps)};
}

// G made abelian: generators are the non-identity elements of G/[G,G] with
// one additive relation per product in its table.
inline FgAbelianGroup abelianization(const FiniteGroup& g) {
    QuotientView q = quotient_group(g, g.commutator_subgroup());
    const std::size_t m = q.group->order();
    if (m == 1) return FgAbelianGroup(0, IntMatrix(0, 0));
    IntMatrix rel((m - 1) * (m - 1), m - 1);
    std::size_t r = 0;
    for (std::size_t a = 1; a < m; ++a)
        for (std::size_t b = 1; b < m; ++b, ++r) {
            rel(r, a - 1) += 1;
            rel(r, b - 1) += 1;
            std::size_t ab = q.group->mult(a, b);
            if (ab != 0) rel(r, ab - 1) -= 1;
        }
    return FgAbelianGroup(m - 1, rel);
}

} // namespace gcoh
