// Acceptance harness: runs the eleven top-level criteria and prints one
// pass/fail line each. Exit code 0 means every criterion finished in its
// documented state (criterion 4 is documented to fail on h >= 2 instances;
// see the README's results table).
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "forge/betti.hpp"
#include "forge/complex.hpp"
#include "forge/constructors.hpp"
#include "forge/groebner.hpp"
#include "forge/linalg.hpp"
#include "forge/toric.hpp"
#include "forge/verify.hpp"

using namespace forge;

namespace {

struct GapPair {
    IntVec a;
    IntVec d;
};

std::vector<GapPair> gap_pairs() {
    return {{make_vec({1, 2}), make_vec({2, 1})},
            {make_vec({2, 3}), make_vec({1, 1})},
            {make_vec({1, 4}), make_vec({3, 1})}};
}

bool is_hypothesis_error(const Error& e) {
    const std::string& c = e.code();
    return c == "not-minimal" || c == "dependent-a-d" || c == "dependent-extremal-rays";
}

struct Check {
    std::size_t total = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    std::string first_failure;

    void record(bool ok, const std::string& what) {
        ++total;
        if (!ok) {
            ++failed;
            if (first_failure.empty()) first_failure = what;
        }
    }
    void skip() { ++skipped; }
    bool pass() const { return failed == 0 && total > 0; }
};

// Runs `body` over the gap grid, skipping non-minimal combinations.
void for_gap_grid(Check& ck, const std::vector<unsigned long>& hs,
                  const std::vector<unsigned long>& ns,
                  const std::function<void(const GapSpec&)>& body) {
    for (const GapPair& pair : gap_pairs())
        for (unsigned long h : hs)
            for (unsigned long n : ns) {
                GapSpec spec{pair.a, pair.d, h, n};
                try {
                    body(spec);
                } catch (const Error& e) {
                    if (is_hypothesis_error(e))
                        ck.skip();
                    else
                        ck.record(false, std::string("error: ") + e.what());
                }
            }
}

AffineSemigroup make_join(unsigned long n1, unsigned long n2, unsigned long h) {
    return join(gap_semigroup({make_vec({1, 2}), make_vec({2, 1}), h, n1}),
                gap_semigroup({make_vec({1, 3}), make_vec({1, 1}), h, n2}));
}

std::string spec_tag(const GapSpec& s) {
    return "a=" + to_string(s.a) + " d=" + to_string(s.d) +
           " h=" + std::to_string(s.h) + " n=" + std::to_string(s.n);
}

// ---- criteria ---------------------------------------------------------

Check criterion_apery() {
    Check ck;
    for_gap_grid(ck, {1, 2, 3}, {2, 3, 4, 5, 6}, [&](const GapSpec& spec) {
        AffineSemigroup gamma = gap_semigroup(spec);
        AperySet bfs = gamma.apery_set();
        AperySet closed = gap_apery_closed_form(spec, gamma);
        ck.record(bfs.elements == closed.elements, "apery mismatch " + spec_tag(spec));
    });
    return ck;
}

Check criterion_join_apery() {
    Check ck;
    for (unsigned long h : {1ul, 2ul})
        for (unsigned long n1 = 2; n1 <= 5; ++n1)
            for (unsigned long n2 = 2; n2 <= 5; ++n2) {
                GapSpec s1{make_vec({1, 2}), make_vec({2, 1}), h, n1};
                GapSpec s2{make_vec({1, 3}), make_vec({1, 1}), h, n2};
                try {
                    AffineSemigroup sj = join(gap_semigroup(s1), gap_semigroup(s2));
                    AperySet bfs = sj.apery_set();
                    AperySet closed = join_apery_closed_form(s1, s2, sj);
                    ck.record(bfs.elements == closed.elements &&
                                  bfs.elements.size() == n1 * n2,
                              "join apery n1=" + std::to_string(n1) +
                                  " n2=" + std::to_string(n2) + " h=" + std::to_string(h));
                } catch (const Error& e) {
                    if (is_hypothesis_error(e))
                        ck.skip();
                    else
                        ck.record(false, e.what());
                }
            }
    return ck;
}

Check criterion_qf() {
    Check ck;
    for_gap_grid(ck, {1, 2, 3}, {2, 3, 4, 5, 6}, [&](const GapSpec& spec) {
        AffineSemigroup gamma = gap_semigroup(spec);
        QFReport computed = gamma.quasi_frobenius();
        QFReport closed = gap_qf_closed_form(spec);
        ck.record(computed.qf_elements == closed.qf_elements &&
                      computed.type_count == spec.n - 1,
                  "qf mismatch " + spec_tag(spec));
    });
    for_gap_grid(ck, {1, 2}, {2, 3, 4}, [&](const GapSpec& spec) {
        AffineSemigroup gamma = gap_semigroup(spec);
        if (!is_cohen_macaulay(gamma)) {
            ck.skip();
            return;
        }
        ck.record(cm_type(gamma) == spec.n - 1, "cm_type mismatch " + spec_tag(spec));
    });
    return ck;
}

Check criterion_normality() {
    Check ck;
    for_gap_grid(ck, {1, 2, 3}, {2, 3, 4, 5, 6}, [&](const GapSpec& spec) {
        AffineSemigroup gamma = gap_semigroup(spec);
        ck.record(gamma.is_normal_by_qf_criterion(),
                  "-QF not in Ap at " + spec_tag(spec));
    });
    for (unsigned long h : {1ul, 2ul})
        for (unsigned long n1 = 2; n1 <= 5; ++n1)
            for (unsigned long n2 = 2; n2 <= 5; ++n2) {
                try {
                    AffineSemigroup sj = make_join(n1, n2, h);
                    ck.record(sj.is_normal_by_qf_criterion(),
                              "join -QF not in Ap n1=" + std::to_string(n1) +
                                  " n2=" + std::to_string(n2) + " h=" + std::to_string(h));
                } catch (const Error& e) {
                    if (is_hypothesis_error(e))
                        ck.skip();
                    else
                        ck.record(false, e.what());
                }
            }
    return ck;
}

Check criterion_determinantal() {
    Check ck;
    for_gap_grid(ck, {1, 2, 3}, {2, 3, 4, 5, 6}, [&](const GapSpec& spec) {
        AffineSemigroup gamma = gap_semigroup(spec);
        VarContext ctx = semigroup_context(gamma);
        StructuredMatrix p = gap_matrix(ctx, spec.h);
        BinomialIdeal minors = minors_2x2(p);
        BinomialIdeal toric = toric_ideal(gamma);
        std::string fail;
        if (!ideal_equal(toric, minors)) fail += "ideal;";
        if (!grade_certified(p, minors)) fail += "grade;";
        GradedFreeComplex en = eagon_northcott(p);
        std::vector<std::size_t> expected{1};
        for (std::size_t i = 1; i + 1 <= spec.n; ++i) {
            std::size_t binom = 1;
            for (std::size_t k = 0; k < i + 1; ++k) binom = binom * (spec.n - k) / (k + 1);
            expected.push_back(i * binom);
        }
        if (en.ranks != expected) fail += "ranks;";
        if (!compose_zero(en)) fail += "dd;";
        if (!is_minimal(en)) fail += "minimal;";
        if (betti_semigroup(gamma).totals() != en.ranks) fail += "betti;";
        ck.record(fail.empty(), fail + " at " + spec_tag(spec));
    });
    return ck;
}

Check criterion_groebner() {
    Check ck;
    for (unsigned long n = 3; n <= 6; ++n) {
        GapSpec spec{make_vec({1, 2}), make_vec({2, 1}), 1, n};
        AffineSemigroup gamma = gap_semigroup(spec);
        VarContext ctx = semigroup_context(gamma);
        BinomialIdeal minors = minors_2x2(gap_matrix(ctx, 1));
        MonomialOrder order = gap_local_order(ctx.size());
        std::vector<Binomial> basis = buchberger(minors.gens, order);
        bool ok = is_groebner(basis, order);
        for (const Binomial& b : basis) {
            Monomial lm = orient(b, order).plus;
            if (total_degree(lm) != 2 || lm.front() > 0 || lm.back() > 0) ok = false;
        }
        ck.record(ok, "standard basis n=" + std::to_string(n));

        // Literal stated set: status is reported, not scored (the narrow
        // index ranges are documented to miss generators).
        std::vector<Binomial> stated = gap_stated_basis(ctx.size(), 1, false);
        BinomialIdeal stated_ideal{ctx, stated};
        bool literal_generates = ideal_equal(stated_ideal, minors);
        std::cerr << "  criterion-6 note: literal set n=" << n
                  << (literal_generates ? " generates" : " does-not-generate")
                  << "\n";
    }
    return ck;
}

Check criterion_join_resolution() {
    Check ck;
    for (unsigned long n1 = 2; n1 <= 4; ++n1)
        for (unsigned long n2 = 2; n2 <= 4; ++n2) {
            std::string tag = " n1=" + std::to_string(n1) + " n2=" + std::to_string(n2);
            try {
                AffineSemigroup left =
                    gap_semigroup({make_vec({1, 2}), make_vec({2, 1}), 1, n1});
                AffineSemigroup right =
                    gap_semigroup({make_vec({1, 3}), make_vec({1, 1}), 1, n2});
                AffineSemigroup joined = join(left, right);
                VarContext ctx = semigroup_context(joined);
                auto [p1, p2] = join_matrices(ctx, n1, n2, 1);
                BinomialIdeal pair = minors_2x2_pair(p1, p2);
                BinomialIdeal jt = toric_ideal(joined);
                std::string fail;
                if (!ideal_equal(jt, pair)) fail += "sum;";
                GradedFreeComplex c1 = eagon_northcott(p1);
                GradedFreeComplex c2 = eagon_northcott(p2);
                GradedFreeComplex tensor = tensor_complexes(c1, c2);
                std::vector<std::size_t> conv(c1.ranks.size() + c2.ranks.size() - 1, 0);
                for (std::size_t i = 0; i < c1.ranks.size(); ++i)
                    for (std::size_t j = 0; j < c2.ranks.size(); ++j)
                        conv[i + j] += c1.ranks[i] * c2.ranks[j];
                if (tensor.ranks != conv) fail += "tensor-ranks;";
                BettiTable bl = betti_semigroup(left);
                BettiTable br = betti_semigroup(right);
                BettiTable bj = betti_semigroup(joined);
                if (bj.totals() != conv) fail += "betti-convolution;";
                if (bj.projective_dimension() !=
                    bl.projective_dimension() + br.projective_dimension())
                    fail += "projdim;";
                if (!is_cohen_macaulay(joined)) fail += "cm;";
                MonomialOrder drl =
                    MonomialOrder::identity_permutation(OrderKind::DegRevLex, ctx.size());
                if (!transversal_by_support(minors_2x2(p1), minors_2x2(p2), drl))
                    fail += "transversal;";
                if (!has_quadratic_groebner(jt, {drl, join_local_order(n1, n2)}))
                    fail += "quadratic;";
                ck.record(fail.empty(), fail + tag);
            } catch (const Error& e) {
                ck.record(false, std::string(e.what()) + tag);
            }
        }
    return ck;
}

Check criterion_gastinger() {
    Check ck;
    for_gap_grid(ck, {1, 2, 3}, {2, 3, 4, 5, 6}, [&](const GapSpec& spec) {
        AffineSemigroup gamma = gap_semigroup(spec);
        BinomialIdeal minors = minors_2x2(gap_matrix(semigroup_context(gamma), spec.h));
        GastingerReport rep = gastinger_check(minors, gamma);
        ck.record(rep.equal && rep.finite && rep.quotient_dim == spec.n,
                  "gastinger " + spec_tag(spec));
    });
    return ck;
}

// Entrywise beta_i(ring) <= beta_i(monomial initial quotient).
bool herzog_leq(const std::vector<std::size_t>& ring,
                const std::vector<std::size_t>& initial) {
    for (std::size_t i = 0; i < ring.size(); ++i)
        if (i >= initial.size() || ring[i] > initial[i]) return false;
    return true;
}

Check criterion_betti_transfer() {
    Check ck;
    for (unsigned long n1 = 2; n1 <= 4; ++n1)
        for (unsigned long n2 = 2; n2 <= 4; ++n2) {
            std::string tag = " n1=" + std::to_string(n1) + " n2=" + std::to_string(n2);
            try {
                AffineSemigroup joined = make_join(n1, n2, 1);
                MonomialOrder order = join_local_order(n1, n2);
                BettiTransferReport rep = betti_transfer_check(joined, order);
                ck.record(rep.totals_equal, "betti transfer" + tag);

                BinomialIdeal jt = toric_ideal(joined);
                std::vector<Monomial> in_gens = initial_ideal(jt.gens, order);
                BettiTable graded = betti_monomial(in_gens, jt.context.size());
                Int closed = reg_closed_form(joined, {});
                ck.record(graded.regularity() == 2 && closed == 2, "regularity" + tag);
            } catch (const Error& e) {
                ck.record(false, std::string(e.what()) + tag);
            }
        }

    // Herzog inequality under degrevlex on the criterion 5-7 instances.
    for_gap_grid(ck, {1, 2, 3}, {2, 3, 4, 5, 6}, [&](const GapSpec& spec) {
        AffineSemigroup gamma = gap_semigroup(spec);
        BinomialIdeal toric = toric_ideal(gamma);
        MonomialOrder drl = MonomialOrder::identity_permutation(OrderKind::DegRevLex,
                                                               toric.context.size());
        std::vector<Monomial> in_gens = initial_ideal(toric.gens, drl);
        BettiTable initial = betti_monomial(in_gens, toric.context.size());
        BettiTable ring = betti_semigroup(gamma);
        ck.record(herzog_leq(ring.totals(), initial.totals()),
                  "herzog " + spec_tag(spec));
    });
    for (unsigned long n1 = 2; n1 <= 4; ++n1)
        for (unsigned long n2 = 2; n2 <= 4; ++n2) {
            AffineSemigroup joined = make_join(n1, n2, 1);
            BinomialIdeal toric = toric_ideal(joined);
            MonomialOrder drl = MonomialOrder::identity_permutation(
                OrderKind::DegRevLex, toric.context.size());
            std::vector<Monomial> in_gens = initial_ideal(toric.gens, drl);
            BettiTable initial = betti_monomial(in_gens, toric.context.size());
            BettiTable ring = betti_semigroup(joined);
            ck.record(herzog_leq(ring.totals(), initial.totals()),
                      "herzog join n1=" + std::to_string(n1) +
                          " n2=" + std::to_string(n2));
        }
    return ck;
}

Check criterion_backelin(bool slow) {
    Check ck;
    if (!slow) {
        ck.skip();
        return ck;
    }
    AffineSemigroup gamma = backelin_projective(2, 8);
    MonomialOrder order =
        MonomialOrder::with_permutation(OrderKind::DegRevLex, {1, 2, 3, 4, 0});
    BinomialIdeal ideal = toric_ideal(gamma, "z");
    std::vector<Binomial> basis = buchberger(ideal.gens, order);
    bool support = !basis.empty();
    for (const Binomial& b : basis) {
        bool has1 = b.plus[0] > 0 || b.minus[0] > 0;
        bool has5 = b.plus[4] > 0 || b.minus[4] > 0;
        if (!has1 || !has5) support = false;
    }
    ck.record(support, "z1/z5 missing from some basis element");
    BettiTransferReport rep = betti_transfer_check(gamma, order);
    ck.record(rep.totals_equal, "backelin betti transfer");
    std::cerr << "  criterion-10 note: support_condition="
              << (rep.support_condition ? "true" : "false")
              << " ring_cm=" << (rep.ring_cm ? "true" : "false")
              << " initial_cm=" << (rep.initial_cm ? "true" : "false") << "\n";
    return ck;
}

Check criterion_properties() {
    Check ck;
    std::mt19937 rng(20240817);
    const std::size_t nvars = 4;
    auto random_monomial = [&](int max_exp) {
        std::uniform_int_distribution<int> d(0, max_exp);
        Monomial m(nvars, 0);
        for (std::size_t i = 0; i < nvars; ++i) m[i] = d(rng);
        return m;
    };
    std::vector<MonomialOrder> orders = {
        MonomialOrder::identity_permutation(OrderKind::DegRevLex, nvars),
        MonomialOrder::identity_permutation(OrderKind::Lex, nvars),
        MonomialOrder::identity_permutation(OrderKind::NegDegRevLex, nvars),
        gap_local_order(nvars)};
    Monomial one(nvars, 0);
    bool axioms = true;
    for (std::size_t t = 0; t < 10000; ++t) {
        Monomial m1 = random_monomial(6), m2 = random_monomial(6), w = random_monomial(4);
        for (const auto& o : orders) {
            int c = compare(o, m1, m2);
            if ((c == 0) != (m1 == m2)) axioms = false;
            if (compare(o, m2, m1) != -c) axioms = false;
            if (compare(o, mono_mul(m1, w), mono_mul(m2, w)) != c) axioms = false;
            if (o.is_local() && compare(o, one, m1) < 0) axioms = false;
        }
    }
    ck.record(axioms, "order axioms");

    AffineSemigroup gamma = gap_semigroup({make_vec({1, 2}), make_vec({2, 1}), 1, 3});
    BinomialIdeal minors = minors_2x2(gap_matrix(semigroup_context(gamma), 1));
    bool replay = true;
    for (const auto& order :
         {MonomialOrder::identity_permutation(OrderKind::DegRevLex, nvars),
          gap_local_order(nvars)}) {
        auto basis = buchberger(minors.gens, order);
        for (std::size_t t = 0; t < 200; ++t) {
            Monomial p = random_monomial(4), q = random_monomial(4);
            if (p == q) continue;
            Binomial f{p, q};
            DivisionTrace trace;
            auto r = normal_form(f, basis, order, kDefaultReductionCap, &trace);
            Poly lhs = trace.unit * f.to_poly();
            Poly rhs(nvars);
            for (std::size_t i = 0; i < basis.size(); ++i)
                rhs += trace.coeffs[i] * basis[i].to_poly();
            if (r) rhs += r->to_poly();
            if (!(lhs == rhs)) replay = false;
        }
    }
    ck.record(replay, "division trace replay");

    // Cones have vanishing reduced homology: the full simplex on k vertices.
    bool cones = true;
    for (std::size_t k = 2; k <= 5; ++k) {
        std::vector<std::vector<std::vector<int>>> levels(k);
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> face;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1u << i)) face.push_back(static_cast<int>(i));
            levels[face.size() - 1].push_back(face);
        }
        for (auto& level : levels) std::sort(level.begin(), level.end());
        std::vector<RatMat> boundaries;
        RatMat aug(1, levels[0].size());
        for (std::size_t j = 0; j < levels[0].size(); ++j) aug.at(0, j) = 1;
        boundaries.push_back(aug);
        for (std::size_t d = 1; d < k; ++d) {
            RatMat mat(levels[d - 1].size(), levels[d].size());
            for (std::size_t j = 0; j < levels[d].size(); ++j) {
                const auto& face = levels[d][j];
                for (std::size_t drop = 0; drop < face.size(); ++drop) {
                    std::vector<int> sub;
                    for (std::size_t i = 0; i < face.size(); ++i)
                        if (i != drop) sub.push_back(face[i]);
                    auto it =
                        std::lower_bound(levels[d - 1].begin(), levels[d - 1].end(), sub);
                    mat.at(it - levels[d - 1].begin(), j) = (drop % 2 == 0) ? 1 : -1;
                }
            }
            boundaries.push_back(mat);
        }
        for (std::size_t rank : reduced_homology_ranks(boundaries))
            if (rank != 0) cones = false;
    }
    ck.record(cones, "cone homology");

    std::uniform_int_distribution<int> coeff(0, 4);
    bool monotone = true;
    for (std::size_t t = 0; t < 1000; ++t) {
        IntVec u(2, Int(0)), v(2, Int(0));
        for (const IntVec& g : gamma.gens()) {
            u = u + Int(coeff(rng)) * g;
            v = v + Int(coeff(rng)) * g;
        }
        if (!gamma.contains(u + v)) monotone = false;
    }
    ck.record(monotone, "membership monotonicity");
    return ck;
}

}  // namespace

int main(int argc, char** argv) {
    bool slow = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--slow") slow = true;

    struct Entry {
        int id;
        std::string name;
        std::function<Check()> body;
        bool expected_pass;
    };
    std::vector<Entry> entries = {
        {1, "apery-closed-form", criterion_apery, true},
        {2, "join-apery", criterion_join_apery, true},
        {3, "qf-type", criterion_qf, true},
        {4, "normality-criterion", criterion_normality, false},
        {5, "determinantal-structure", criterion_determinantal, true},
        {6, "groebner-basis", criterion_groebner, true},
        {7, "join-ideal-resolution", criterion_join_resolution, true},
        {8, "gastinger", criterion_gastinger, true},
        {9, "betti-transfer", criterion_betti_transfer, true},
        // The z1/z5 support claim fails: the ideal has a minimal generator
        // z2*z4^2 - z3^2*z5 whose degree admits no other binomial, so every
        // reduced basis contains it and it has no z1. Betti equality holds.
        {10, "backelin", [slow] { return criterion_backelin(slow); }, false},
        {11, "property-suites", criterion_properties, true},
    };

    int mismatches = 0;
    for (const auto& e : entries) {
        auto start = std::chrono::steady_clock::now();
        Check ck;
        try {
            ck = e.body();
        } catch (const Error& err) {
            ck.record(false, std::string("uncaught: ") + err.what());
        }
        auto secs = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count() /
                    1000.0;
        std::string verdict;
        if (ck.total == 0 && ck.skipped > 0) {
            verdict = "SKIPPED (skipped-slow)";
        } else if (ck.pass()) {
            verdict = "PASS";
            if (!e.expected_pass) ++mismatches, verdict += " (unexpected)";
        } else {
            verdict = "FAIL (" + std::to_string(ck.failed) + "/" +
                      std::to_string(ck.total) + ": " + ck.first_failure + ")";
            if (e.expected_pass)
                ++mismatches;
            else
                verdict += " [documented]";
        }
        std::cout << "criterion-" << e.id << " " << e.name << ": " << verdict << " ["
                  << secs << "s]" << std::endl;
    }
    return mismatches == 0 ? 0 : 1;
}
