#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "gcoh/finite_group.hpp"

using namespace gcoh;

TEST_CASE("builtin groups pass their construction checks") {
    CHECK(builtin_group("cyclic(1)")->order() == 1);
    CHECK(builtin_group("cyclic(12)")->order() == 12);
    CHECK(builtin_group("dihedral(4)")->order() == 8);
    CHECK(builtin_group("symmetric(3)")->order() == 6);
    CHECK(builtin_group("symmetric(4)")->order() == 24);
    CHECK(builtin_group("quaternion8")->order() == 8);
    CHECK(builtin_group("S4")->order() == 24);
    CHECK_THROWS_AS(builtin_group("monster"), input_error);
}

TEST_CASE("symmetric(3) is the nonabelian order-6 group") {
    auto s3 = symmetric_group(3);
    CHECK(s3->order() == 6);
    CHECK_FALSE(s3->is_abelian());
    // element order census: 1 identity, 3 transpositions, 2 three-cycles
    std::map<std::size_t, int> orders;
    for (std::size_t g = 0; g < 6; ++g) orders[s3->element_order(g)]++;
    CHECK(orders[1] == 1);
    CHECK(orders[2] == 3);
    CHECK(orders[3] == 2);
}

TEST_CASE("every subgroup of quaternion8 is normal") {
    auto q8 = quaternion_group();
    std::set<std::vector<std::size_t>> subgroups;
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 0; b < 8; ++b) subgroups.insert(q8->subgroup_closure({a, b}));
    CHECK(subgroups.size() == 6); // 1, Z(Q8), <i>, <j>, <k>, Q8
    for (const auto& h : subgroups) CHECK(q8->is_normal(h));
}

TEST_CASE("dihedral(4) has a non-normal subgroup") {
    auto d4 = dihedral_group(4);
    bool found_non_normal = false;
    for (std::size_t a = 1; a < 8; ++a) {
        auto h = d4->subgroup_closure({a});
        if (!d4->is_normal(h)) found_non_normal = true;
    }
    CHECK(found_non_normal);
}

TEST_CASE("abelianizations") {
    CHECK(abelianization(*cyclic_group(6)) == FgAbelianGroup::from_invariant_factors({6}));
    CHECK(abelianization(*symmetric_group(3)) == FgAbelianGroup::from_invariant_factors({2}));
    CHECK(abelianization(*symmetric_group(4)) == FgAbelianGroup::from_invariant_factors({2}));
    CHECK(abelianization(*quaternion_group()) == FgAbelianGroup::from_invariant_factors({2, 2}));
    CHECK(abelianization(*dihedral_group(4)) == FgAbelianGroup::from_invariant_factors({2, 2}));
    CHECK(abelianization(*cyclic_group(1)).is_trivial());
}

TEST_CASE("subgroup and quotient views") {
    auto c4 = cyclic_group(4);
    auto sub = subgroup_as_group(*c4, {0, 2});
    CHECK(sub.group->order() == 2);
    CHECK(sub.mapping == std::vector<std::size_t>{0, 2});

    auto q = quotient_group(*c4, {0, 2});
    CHECK(q.group->order() == 2);
    CHECK(q.projection[0] == q.projection[2]);
    CHECK(q.projection[1] == q.projection[3]);
    CHECK(q.projection[0] != q.projection[1]);

    auto s3 = symmetric_group(3);
    CHECK_THROWS_AS(subgroup_as_group(*s3, {0, 1, 2}), input_error);
}

TEST_CASE("bad tables are rejected") {
    // 0 is not an identity
    CHECK_THROWS_AS(group_from_table("bad", {{1, 0}, {0, 1}}), inconsistency_error);
    // break associativity inside a latin square that still has an identity
    std::vector<std::vector<std::size_t>> t{
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    CHECK_THROWS_AS(group_from_table("bad", t), inconsistency_error);
}

TEST_CASE("word evaluation against the table") {
    auto s4 = symmetric_group(4);
    const auto& pres = s4->presentation();
    REQUIRE(pres.generators.size() == 2);
    CHECK(s4->element_order(pres.generators[0]) == 4);
    CHECK(s4->element_order(pres.generators[1]) == 2);
    CHECK(s4->evaluate_word({1, -1}) == 0);
    CHECK(s4->evaluate_word({1, 2, 1, 2, 1, 2}) == 0);
}
