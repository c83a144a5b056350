#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "forge/semigroup.hpp"

using namespace forge;

namespace {
AffineSemigroup gamma_n3() {
    // a=(1,2), d=(2,1), h=1, n=3.
    return AffineSemigroup({make_vec({1, 2}), make_vec({3, 3}), make_vec({5, 4}),
                            make_vec({7, 5})});
}
}  // namespace

TEST_CASE("construction validates minimality") {
    CHECK_NOTHROW(gamma_n3());
    CHECK_THROWS_AS(AffineSemigroup({make_vec({1, 0}), make_vec({2, 0})}), Error);
    CHECK_THROWS_AS(AffineSemigroup({make_vec({1, 2}), make_vec({2, 4})}), Error);
    CHECK_THROWS_AS(AffineSemigroup({make_vec({0, 0})}), Error);
}

TEST_CASE("membership with witness") {
    AffineSemigroup g = gamma_n3();
    auto w = g.factorization_witness(make_vec({4, 5}));
    REQUIRE(w.has_value());
    IntVec sum(2, Int(0));
    for (std::size_t i = 0; i < w->size(); ++i) sum = sum + (*w)[i] * g.gens()[i];
    CHECK(sum == make_vec({4, 5}));
    CHECK(!g.contains(make_vec({2, 1})));
    CHECK(g.contains(make_vec({0, 0})));
    CHECK(!g.contains(make_vec({-1, 3})));
}

TEST_CASE("factorizations are exhaustive") {
    AffineSemigroup g({make_vec({2, 0}), make_vec({3, 0})});
    // (6,0) = 3*(2,0) = 2*(3,0).
    auto fs = g.factorizations(make_vec({6, 0}));
    CHECK(fs.size() == 2);
    CHECK(g.factorizations(make_vec({0, 0})).size() == 1);
    CHECK_THROWS_AS(gamma_n3().factorizations(make_vec({2, 1})), Error);
}

TEST_CASE("extremal rays of the progression family") {
    AffineSemigroup g = gamma_n3();
    CHECK(g.extremal_rays() == std::set<std::size_t>{0, 3});
    CHECK(g.is_simplicial());
}

TEST_CASE("extremal rays of the cone over a square") {
    AffineSemigroup g({make_vec({0, 0, 1}), make_vec({1, 0, 1}), make_vec({0, 1, 1}),
                       make_vec({1, 1, 1})});
    CHECK(g.extremal_rays() == std::set<std::size_t>{0, 1, 2, 3});
    CHECK(!g.is_simplicial());
}

TEST_CASE("free semigroup is simplicial") {
    AffineSemigroup g({make_vec({1, 0}), make_vec({0, 1})});
    CHECK(g.is_simplicial());
    CHECK(g.extremal_rays() == std::set<std::size_t>{0, 1});
    auto ap = g.apery_set();
    CHECK(ap.elements == std::vector<IntVec>{make_vec({0, 0})});
}

TEST_CASE("apery set of the n=3 instance") {
    AffineSemigroup g = gamma_n3();
    auto ap = g.apery_set();
    std::vector<IntVec> expected = {make_vec({0, 0}), make_vec({3, 3}), make_vec({5, 4})};
    CHECK(ap.elements == expected);
}

TEST_CASE("apery set agrees with the defining property") {
    AffineSemigroup g = gamma_n3();
    auto ap = g.apery_set();
    for (const IntVec& b : ap.elements) {
        CHECK(g.contains(b));
        for (std::size_t j : g.extremal_rays()) CHECK(!g.contains(b - g.gens()[j]));
    }
}

TEST_CASE("quasi-Frobenius elements of the n=3 instance") {
    AffineSemigroup g = gamma_n3();
    auto qf = g.quasi_frobenius();
    std::vector<IntVec> expected = {make_vec({-5, -4}), make_vec({-3, -3})};
    CHECK(qf.qf_elements == expected);
    CHECK(qf.type_count == 2);
}

TEST_CASE("free semigroup quasi-Frobenius") {
    AffineSemigroup g({make_vec({1, 0}), make_vec({0, 1})});
    auto qf = g.quasi_frobenius();
    CHECK(qf.qf_elements == std::vector<IntVec>{make_vec({-1, -1})});
    CHECK(qf.type_count == 1);
}

TEST_CASE("normality criterion holds at h=1") {
    CHECK(gamma_n3().is_normal_by_qf_criterion());
}

TEST_CASE("ord maximizes the factorization length") {
    AffineSemigroup g = gamma_n3();
    CHECK(g.ord(make_vec({5, 4})) == 1);
    CHECK(g.ord(make_vec({0, 0})) == 0);
    CHECK(g.ord(make_vec({2, 4})) == 2);
    CHECK_THROWS_AS(g.ord(make_vec({2, 1})), Error);
}

TEST_CASE("homogeneity of the n=3 instance") {
    CHECK(gamma_n3().is_homogeneous());
    // Homogeneity only inspects Apery elements: Ap = {0,(3,0)} here, both
    // with unique factorizations, even though (6,0) has lengths 2 and 3.
    AffineSemigroup numerical({make_vec({2, 0}), make_vec({3, 0})});
    CHECK(numerical.is_homogeneous());
}

TEST_CASE("membership is monotone under addition") {
    AffineSemigroup g = gamma_n3();
    std::vector<IntVec> members = {make_vec({1, 2}), make_vec({3, 3}), make_vec({8, 7}),
                                   make_vec({4, 5})};
    for (const auto& u : members)
        for (const auto& v : members) CHECK(g.contains(u + v));
}

TEST_CASE("apery cap converts divergence into an error") {
    AffineSemigroup g = gamma_n3();
    // With respect to a non-extremal generator only, the Apery set is
    // infinite; the cap must fire.
    CHECK_THROWS_AS(g.apery_set({1}, 100), Error);
}
