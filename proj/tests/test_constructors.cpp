#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "forge/constructors.hpp"

using namespace forge;

TEST_CASE("gap generators") {
    GapSpec spec{make_vec({1, 2}), make_vec({2, 1}), 1, 3};
    auto gens = spec.generators();
    std::vector<IntVec> expected = {make_vec({1, 2}), make_vec({3, 3}), make_vec({5, 4}),
                                    make_vec({7, 5})};
    CHECK(gens == expected);
    AffineSemigroup g = gap_semigroup(spec);
    CHECK(g.extremal_rays() == std::set<std::size_t>{0, 3});
}

TEST_CASE("gap generators with h=2") {
    GapSpec spec{make_vec({1, 2}), make_vec({2, 1}), 2, 2};
    auto gens = spec.generators();
    std::vector<IntVec> expected = {make_vec({1, 2}), make_vec({4, 5}), make_vec({6, 6})};
    CHECK(gens == expected);
    CHECK_NOTHROW(gap_semigroup(spec));
}

TEST_CASE("gap rejects dependent a and d") {
    GapSpec spec{make_vec({1, 0}), make_vec({2, 0}), 1, 2};
    CHECK_THROWS_AS(gap_semigroup(spec), Error);
}

TEST_CASE("apery closed form h=1 n=3") {
    GapSpec spec{make_vec({1, 2}), make_vec({2, 1}), 1, 3};
    AffineSemigroup g = gap_semigroup(spec);
    auto closed = gap_apery_closed_form(spec, g);
    std::vector<IntVec> expected = {make_vec({0, 0}), make_vec({3, 3}), make_vec({5, 4})};
    CHECK(closed.elements == expected);
    CHECK(closed.closed_form);
    CHECK(g.apery_set().elements == closed.elements);
}

TEST_CASE("apery closed form h=3 n=4") {
    GapSpec spec{make_vec({1, 2}), make_vec({2, 1}), 3, 4};
    AffineSemigroup g = gap_semigroup(spec);
    auto closed = gap_apery_closed_form(spec, g);
    std::vector<IntVec> expected = {make_vec({0, 0}), make_vec({5, 7}), make_vec({7, 8}),
                                    make_vec({9, 9})};
    CHECK(closed.elements == expected);
    CHECK(g.apery_set().elements == closed.elements);
}

TEST_CASE("qf closed form") {
    GapSpec spec{make_vec({1, 2}), make_vec({2, 1}), 1, 3};
    auto qf = gap_qf_closed_form(spec);
    std::vector<IntVec> expected = {make_vec({-5, -4}), make_vec({-3, -3})};
    CHECK(qf.qf_elements == expected);
    CHECK(qf.type_count == 2);
    CHECK(gap_semigroup(spec).quasi_frobenius().qf_elements == qf.qf_elements);
}

TEST_CASE("qf closed form matches the computed set for h=2") {
    GapSpec spec{make_vec({1, 2}), make_vec({2, 1}), 2, 3};
    auto qf = gap_qf_closed_form(spec);
    CHECK(qf.type_count == 2);
    CHECK(gap_semigroup(spec).quasi_frobenius().qf_elements == qf.qf_elements);
}

TEST_CASE("join builds the two-block semigroup") {
    AffineSemigroup left = gap_semigroup({make_vec({1, 2}), make_vec({2, 1}), 1, 2});
    AffineSemigroup right = gap_semigroup({make_vec({1, 3}), make_vec({1, 1}), 1, 2});
    AffineSemigroup joined = join(left, right);
    std::vector<IntVec> expected = {
        make_vec({1, 2, 0, 0}), make_vec({3, 3, 0, 0}), make_vec({5, 4, 0, 0}),
        make_vec({0, 0, 1, 3}), make_vec({0, 0, 2, 4}), make_vec({0, 0, 3, 5})};
    CHECK(joined.gens() == expected);
    CHECK(joined.extremal_rays() == std::set<std::size_t>{0, 2, 3, 5});
    CHECK(joined.is_simplicial());
}

TEST_CASE("join is block-embedded, so repeated factors stay independent") {
    AffineSemigroup left = gap_semigroup({make_vec({1, 2}), make_vec({2, 1}), 1, 2});
    AffineSemigroup a({make_vec({1, 2}), make_vec({3, 3}), make_vec({5, 4})});
    AffineSemigroup joined = join(left, a);
    CHECK(joined.ambient_dim() == 4);
    CHECK(joined.gens().size() == 6);
}

TEST_CASE("join apery closed form n1=n2=2") {
    GapSpec s1{make_vec({1, 2}), make_vec({2, 1}), 1, 2};
    GapSpec s2{make_vec({1, 3}), make_vec({1, 1}), 1, 2};
    AffineSemigroup joined = join(gap_semigroup(s1), gap_semigroup(s2));
    auto closed = join_apery_closed_form(s1, s2, joined);
    CHECK(closed.elements.size() == 4);
    CHECK(joined.apery_set().elements == closed.elements);
}

TEST_CASE("join apery counts n1*n2") {
    GapSpec s1{make_vec({1, 2}), make_vec({2, 1}), 1, 3};
    GapSpec s2{make_vec({1, 3}), make_vec({1, 1}), 1, 2};
    AffineSemigroup joined = join(gap_semigroup(s1), gap_semigroup(s2));
    auto closed = join_apery_closed_form(s1, s2, joined);
    CHECK(closed.elements.size() == 6);
    CHECK(joined.apery_set().elements == closed.elements);
}

TEST_CASE("backelin family") {
    AffineSemigroup g = backelin_projective(2, 8);
    std::vector<IntVec> expected = {make_vec({0, 75}), make_vec({67, 8}),
                                    make_vec({70, 5}), make_vec({74, 1}),
                                    make_vec({75, 0})};
    CHECK(g.gens() == expected);
    CHECK(g.extremal_rays() == std::set<std::size_t>{0, 4});
    CHECK_THROWS_AS(backelin_projective(2, 7), Error);
}

TEST_CASE("backelin n=3 r=11") {
    AffineSemigroup g = backelin_projective(3, 11);
    std::vector<IntVec> expected = {make_vec({0, 135}), make_vec({124, 11}),
                                    make_vec({127, 8}), make_vec({134, 1}),
                                    make_vec({135, 0})};
    CHECK(g.gens() == expected);
}
