#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "forge/constructors.hpp"
#include "forge/toric.hpp"

using namespace forge;

namespace {

Monomial m(std::initializer_list<int> es) { return Monomial(es); }

AffineSemigroup gamma_n3() {
    return gap_semigroup({make_vec({1, 2}), make_vec({2, 1}), 1, 3});
}

AffineSemigroup join_22() {
    AffineSemigroup left = gap_semigroup({make_vec({1, 2}), make_vec({2, 1}), 1, 2});
    AffineSemigroup right = gap_semigroup({make_vec({1, 2}), make_vec({2, 1}), 1, 2});
    return join(left, right);
}

}  // namespace

TEST_CASE("semigroup context carries names and degrees") {
    auto ctx = semigroup_context(gamma_n3());
    CHECK(ctx.names == std::vector<std::string>{"x1", "x2", "x3", "x4"});
    CHECK(ctx.degree_map == gamma_n3().gens());
    CHECK(ctx.gamma_degree(m({1, 1, 0, 0})) == make_vec({4, 5}));
}

TEST_CASE("gap matrix shape") {
    auto ctx = semigroup_context(gamma_n3());
    auto p = gap_matrix(ctx, 2);
    REQUIRE(p.width() == 3);
    CHECK(p.top == std::vector<Monomial>{m({2, 0, 0, 0}), m({0, 1, 0, 0}), m({0, 0, 1, 0})});
    CHECK(p.bottom ==
          std::vector<Monomial>{m({0, 1, 0, 0}), m({0, 0, 1, 0}), m({0, 0, 0, 1})});
}

TEST_CASE("minors of the h=1 width-3 matrix") {
    auto ctx = semigroup_context(gamma_n3());
    auto ideal = minors_2x2(gap_matrix(ctx, 1));
    std::set<Binomial> got(ideal.gens.begin(), ideal.gens.end());
    std::set<Binomial> expected = {
        canonical(Binomial{m({1, 0, 1, 0}), m({0, 2, 0, 0})}),
        canonical(Binomial{m({1, 0, 0, 1}), m({0, 1, 1, 0})}),
        canonical(Binomial{m({0, 1, 0, 1}), m({0, 0, 2, 0})})};
    CHECK(got == expected);
}

TEST_CASE("toric ideal of the n=3 instance equals the minors") {
    AffineSemigroup g = gamma_n3();
    auto toric = toric_ideal(g);
    auto minors = minors_2x2(gap_matrix(semigroup_context(g), 1));
    CHECK(ideal_equal(toric, minors));
}

TEST_CASE("toric ideal of a free semigroup is zero") {
    AffineSemigroup g({make_vec({1, 0}), make_vec({0, 1})});
    CHECK(toric_ideal(g).gens.empty());
}

TEST_CASE("toric ideal of a join splits into block relations") {
    AffineSemigroup g = join_22();
    auto toric = toric_ideal(g);
    auto [p1, p2] = join_matrices(semigroup_context(g), 2, 2, 1);
    auto pair = minors_2x2_pair(p1, p2);
    REQUIRE(pair.gens.size() == 2);
    CHECK(ideal_equal(toric, pair));
}

TEST_CASE("generation test accepts the full minor set") {
    AffineSemigroup g = gamma_n3();
    auto j = minors_2x2(gap_matrix(semigroup_context(g), 1));
    auto report = gastinger_check(j, g);
    CHECK(report.contained);
    CHECK(report.finite);
    CHECK(report.apery_size == 3);
    CHECK(report.quotient_dim == 3);
    CHECK(report.equal);
}

TEST_CASE("generation test rejects a single minor") {
    AffineSemigroup g = gamma_n3();
    auto j = minors_2x2(gap_matrix(semigroup_context(g), 1));
    j.gens = {j.gens.front()};
    auto report = gastinger_check(j, g);
    CHECK(report.contained);
    CHECK(!report.equal);
}

TEST_CASE("generation test throws on non-homogeneous input") {
    AffineSemigroup g = gamma_n3();
    BinomialIdeal j;
    j.context = semigroup_context(g);
    j.gens = {Binomial{m({1, 0, 0, 0}), m({0, 1, 0, 0})}};
    CHECK_THROWS_AS(gastinger_check(j, g), Error);
}

TEST_CASE("coprime witness under degrevlex") {
    auto order = MonomialOrder::identity_permutation(OrderKind::DegRevLex, 4);
    auto ideal = minors_2x2(gap_matrix(semigroup_context(gamma_n3()), 1));
    auto two = coprime_regular_sequence_witness(ideal, 2, order);
    REQUIRE(two.has_value());
    REQUIRE(two->size() == 2);
    CHECK(coprime(orient((*two)[0], order).plus, orient((*two)[1], order).plus));
    CHECK(!coprime_regular_sequence_witness(ideal, 3, order).has_value());
}

TEST_CASE("transversality by disjoint initial supports") {
    AffineSemigroup g = join_22();
    auto [p1, p2] = join_matrices(semigroup_context(g), 2, 2, 1);
    auto i1 = minors_2x2(p1);
    auto i2 = minors_2x2(p2);
    auto order = MonomialOrder::identity_permutation(OrderKind::DegRevLex, 6);
    CHECK(transversal_by_support(i1, i2, order));
    CHECK(!transversal_by_support(i1, i1, order));
}

TEST_CASE("quadratic basis detection") {
    auto ideal = minors_2x2(gap_matrix(semigroup_context(gamma_n3()), 1));
    auto drl = MonomialOrder::identity_permutation(OrderKind::DegRevLex, 4);
    auto found = has_quadratic_groebner(ideal, {drl});
    CHECK(found.has_value());
    CHECK(!has_quadratic_groebner(ideal, {}).has_value());
}

TEST_CASE("local orders have the advertised shape") {
    CHECK(gap_local_order(4).is_local());
    CHECK(join_local_order(2, 2).is_local());
}

TEST_CASE("stated generating set for the gap family") {
    // n = 3, h = 1: the narrow ranges give only x2^2 - x1x3; widening adds
    // x2x3 - x1x4.
    auto literal = gap_stated_basis(4, 1, false);
    REQUIRE(literal.size() == 1);
    CHECK(literal[0] == canonical(Binomial{m({0, 2, 0, 0}), m({1, 0, 1, 0})}));
    auto extended = gap_stated_basis(4, 1, true);
    REQUIRE(extended.size() == 2);
    std::set<Binomial> got(extended.begin(), extended.end());
    CHECK(got.count(canonical(Binomial{m({0, 1, 1, 0}), m({1, 0, 0, 1})})) == 1);

    auto h2 = gap_stated_basis(4, 2, false);
    REQUIRE(h2.size() == 1);
    CHECK(h2[0] == canonical(Binomial{m({0, 2, 0, 0}), m({2, 0, 1, 0})}));
}
