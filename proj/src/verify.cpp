#include "forge/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "forge/betti.hpp"
#include "forge/complex.hpp"
#include "forge/constructors.hpp"
#include "forge/error.hpp"
#include "forge/json_io.hpp"

namespace forge {

namespace {

const char* kVerified = "verified";
const char* kRefuted = "refuted";
const char* kHypothesisFailed = "hypothesis-failed";
const char* kSkippedSlow = "skipped-slow";

struct GapPair {
    IntVec a;
    IntVec d;
};

std::vector<GapPair> gap_pairs() {
    return {{make_vec({1, 2}), make_vec({2, 1})},
            {make_vec({2, 3}), make_vec({1, 1})},
            {make_vec({1, 4}), make_vec({3, 1})}};
}

Json gap_params(const GapSpec& spec) {
    Json p;
    p["a"] = vec_to_json(spec.a);
    p["d"] = vec_to_json(spec.d);
    p["h"] = spec.h;
    p["n"] = spec.n;
    return p;
}

Json join_params(unsigned long n1, unsigned long n2, unsigned long h) {
    Json p;
    p["n1"] = n1;
    p["n2"] = n2;
    p["h"] = h;
    return p;
}

// True for construction-hypothesis errors (non-minimal grid combinations are
// skipped with a diagnostic, not counted as refutations).
bool is_hypothesis_error(const Error& e) {
    const std::string& c = e.code();
    return c == "not-minimal" || c == "dependent-a-d" || c == "dependent-extremal-rays";
}

class Suite {
public:
    explicit Suite(const VerifyOptions& options) : options_(options) {}

    std::vector<VerifyClaim> run() {
        claim("thm-3.1", [this](VerifyClaim& c) { check_betti_transfer(c); });
        claim("cor-3.2", [this](VerifyClaim& c) { check_associated_graded(c); });
        claim("ex-3.3", [this](VerifyClaim& c) { check_backelin(c); });
        claim("thm-4.2", [this](VerifyClaim& c) { check_join_resolution(c); });
        claim("cor-4.3", [this](VerifyClaim& c) { check_join_cm(c); });
        claim("thm-5.2", [this](VerifyClaim& c) { check_gap_apery(c); });
        claim("thm-5.3", [this](VerifyClaim& c) { check_join_apery(c); });
        claim("thm-5.5", [this](VerifyClaim& c) { check_gap_qf(c); });
        claim("lem-5.6", [this](VerifyClaim& c) { check_normality(c); });
        claim("thm-5.7", [this](VerifyClaim& c) { check_gap_cm(c); });
        claim("thm-5.8", [this](VerifyClaim& c) { check_gastinger(c); });
        claim("thm-5.9", [this](VerifyClaim& c) { check_determinantal(c); });
        claim("thm-5.10", [this](VerifyClaim& c) { check_standard_basis(c); });
        claim("thm-5.10-literal", [this](VerifyClaim& c) { check_stated_basis(c); });
        claim("cor-5.11", [this](VerifyClaim& c) { check_initial_ideal(c); });
        claim("thm-5.12", [this](VerifyClaim& c) { check_join_ideal(c); });
        claim("thm-5.13", [this](VerifyClaim& c) { check_join_regularity(c); });
        return std::move(claims_);
    }

private:
    VerifyOptions options_;
    std::vector<VerifyClaim> claims_;

    void claim(const std::string& id, const std::function<void(VerifyClaim&)>& body) {
        if (!options_.only.empty() && options_.only != id) return;
        VerifyClaim c;
        c.id = id;
        body(c);
        claims_.push_back(std::move(c));
    }

    void add(VerifyClaim& c, const Json& params, bool ok, const std::string& details = "") {
        c.instances.push_back({params.dump(), ok ? kVerified : kRefuted, details});
    }

    void add_status(VerifyClaim& c, const Json& params, const std::string& status,
                    const std::string& details) {
        c.instances.push_back({params.dump(), status, details});
    }

    // Runs `body` for one instance, converting construction-hypothesis errors
    // into hypothesis-failed records and anything else into refutations.
    void instance(VerifyClaim& c, const Json& params, const std::function<void()>& body) {
        try {
            body();
        } catch (const Error& e) {
            add_status(c, params, is_hypothesis_error(e) ? kHypothesisFailed : kRefuted,
                       e.code() + ": " + e.what());
        }
    }

    template <typename F>
    void for_gap_grid(const std::vector<unsigned long>& hs,
                      const std::vector<unsigned long>& ns, F&& body) {
        for (const GapPair& pair : gap_pairs())
            for (unsigned long h : hs)
                for (unsigned long n : ns) {
                    GapSpec spec{pair.a, pair.d, h, n};
                    body(spec);
                }
    }

    // ---- claim bodies -------------------------------------------------

    void check_gap_apery(VerifyClaim& c) {
        for_gap_grid({1, 2, 3}, {2, 3, 4, 5, 6}, [&](const GapSpec& spec) {
            Json params = gap_params(spec);
            instance(c, params, [&] {
                AffineSemigroup gamma = gap_semigroup(spec);
                AperySet bfs = gamma.apery_set(gamma.extremal_rays(), options_.apery_cap);
                AperySet closed = gap_apery_closed_form(spec, gamma);
                bool ok = bfs.elements == closed.elements;
                add(c, params, ok,
                    ok ? "" : "bfs=" + vectors_to_json(bfs.elements).dump());
            });
        });
    }

    void check_join_apery(VerifyClaim& c) {
        auto pairs = gap_pairs();
        for (unsigned long h : {1ul, 2ul})
            for (unsigned long n1 = 2; n1 <= 5; ++n1)
                for (unsigned long n2 = 2; n2 <= 5; ++n2) {
                    GapSpec s1{pairs[0].a, pairs[0].d, h, n1};
                    GapSpec s2{make_vec({1, 3}), make_vec({1, 1}), h, n2};
                    Json params = join_params(n1, n2, h);
                    instance(c, params, [&] {
                        AffineSemigroup g1 = gap_semigroup(s1);
                        AffineSemigroup g2 = gap_semigroup(s2);
                        AffineSemigroup sj = join(g1, g2);
                        AperySet bfs = sj.apery_set(sj.extremal_rays(), options_.apery_cap);
                        AperySet closed = join_apery_closed_form(s1, s2, sj);
                        bool ok = bfs.elements == closed.elements &&
                                  bfs.elements.size() == n1 * n2;
                        add(c, params, ok,
                            ok ? "" : "size=" + std::to_string(bfs.elements.size()));
                    });
                }
    }

    void check_gap_qf(VerifyClaim& c) {
        for_gap_grid({1, 2, 3}, {2, 3, 4, 5, 6}, [&](const GapSpec& spec) {
            Json params = gap_params(spec);
            instance(c, params, [&] {
                AffineSemigroup gamma = gap_semigroup(spec);
                QFReport computed = gamma.quasi_frobenius(options_.apery_cap);
                QFReport closed = gap_qf_closed_form(spec);
                bool match = computed.qf_elements == closed.qf_elements &&
                             computed.type_count == spec.n - 1;
                // The verbatim formula -(ha+jd) only agrees at h = 1; the
                // closed form used above drops the h factor, which cancels
                // against the extremal-ray sum. Report the verbatim status.
                std::vector<IntVec> verbatim;
                for (unsigned long j = 1; j < spec.n; ++j)
                    verbatim.push_back(negate(Int(spec.h) * spec.a + Int(j) * spec.d));
                sort_vectors(verbatim);
                std::string note = verbatim == computed.qf_elements
                                       ? "verbatim-formula=agrees"
                                       : "verbatim-formula=disagrees";
                add(c, params, match, note);
            });
        });
        // cm_type = type on Cohen-Macaulay instances (smaller grid: the Betti
        // oracle repeats per instance).
        for_gap_grid({1, 2}, {2, 3, 4}, [&](const GapSpec& spec) {
            Json params = gap_params(spec);
            params["check"] = "cm-type";
            instance(c, params, [&] {
                AffineSemigroup gamma = gap_semigroup(spec);
                if (!is_cohen_macaulay(gamma, options_.cap)) {
                    add_status(c, params, kHypothesisFailed, "not Cohen-Macaulay");
                    return;
                }
                std::size_t t = cm_type(gamma, options_.cap);
                add(c, params, t == spec.n - 1, "cm_type=" + std::to_string(t));
            });
        });
    }

    void check_normality(VerifyClaim& c) {
        for_gap_grid({1, 2, 3}, {2, 3, 4, 5}, [&](const GapSpec& spec) {
            Json params = gap_params(spec);
            instance(c, params, [&] {
                AffineSemigroup gamma = gap_semigroup(spec);
                bool ok = gamma.is_normal_by_qf_criterion(options_.apery_cap);
                add(c, params, ok, ok ? "" : "-QF not contained in Ap");
            });
        });
        // The join instance.
        {
            Json params = join_params(2, 2, 1);
            params["family"] = "join";
            instance(c, params, [&] {
                AffineSemigroup sj = join(
                    gap_semigroup({make_vec({1, 2}), make_vec({2, 1}), 1, 2}),
                    gap_semigroup({make_vec({1, 3}), make_vec({1, 1}), 1, 2}));
                add(c, params, sj.is_normal_by_qf_criterion(options_.apery_cap));
            });
        }
    }

    void check_gap_cm(VerifyClaim& c) {
        for_gap_grid({1, 2, 3}, {2, 3, 4}, [&](const GapSpec& spec) {
            Json params = gap_params(spec);
            instance(c, params, [&] {
                AffineSemigroup gamma = gap_semigroup(spec);
                add(c, params, is_cohen_macaulay(gamma, options_.cap));
            });
        });
    }

    void check_gastinger(VerifyClaim& c) {
        for_gap_grid({1, 2, 3}, {2, 3, 4, 5, 6}, [&](const GapSpec& spec) {
            Json params = gap_params(spec);
            instance(c, params, [&] {
                AffineSemigroup gamma = gap_semigroup(spec);
                VarContext ctx = semigroup_context(gamma);
                BinomialIdeal minors = minors_2x2(gap_matrix(ctx, spec.h));
                GastingerReport rep = gastinger_check(minors, gamma, options_.cap);
                bool ok = rep.equal && rep.finite && rep.quotient_dim == spec.n;
                add(c, params, ok,
                    "dim=" + std::to_string(rep.quotient_dim) +
                        " apery=" + std::to_string(rep.apery_size));
            });
        });
    }

    void check_determinantal(VerifyClaim& c) {
        for_gap_grid({1, 2, 3}, {2, 3, 4, 5, 6}, [&](const GapSpec& spec) {
            Json params = gap_params(spec);
            instance(c, params, [&] {
                AffineSemigroup gamma = gap_semigroup(spec);
                VarContext ctx = semigroup_context(gamma);
                StructuredMatrix p = gap_matrix(ctx, spec.h);
                BinomialIdeal minors = minors_2x2(p);
                BinomialIdeal toric = toric_ideal(gamma, "x", options_.cap);
                std::string fail;
                if (!ideal_equal(toric, minors, options_.cap)) fail += "ideal-differs;";
                if (!grade_certified(p, minors)) fail += "grade-witness-missing;";
                GradedFreeComplex en = eagon_northcott(p);
                std::vector<std::size_t> expected{1};
                for (std::size_t i = 1; i + 1 <= spec.n; ++i) {
                    // i * C(n, i+1)
                    std::size_t binom = 1;
                    for (std::size_t k = 0; k < i + 1; ++k)
                        binom = binom * (spec.n - k) / (k + 1);
                    expected.push_back(i * binom);
                }
                if (en.ranks != expected) fail += "en-ranks;";
                if (!compose_zero(en)) fail += "dd-nonzero;";
                if (!is_minimal(en)) fail += "not-minimal-complex;";
                if (!assign_degrees(en)) fail += "not-homogeneous;";
                BettiTable betti = betti_semigroup(gamma, options_.cap);
                if (betti.totals() != en.ranks) fail += "betti-mismatch;";
                add(c, params, fail.empty(), fail);
            });
        });
    }

    void check_standard_basis(VerifyClaim& c) {
        for (unsigned long n = 3; n <= 6; ++n) {
            GapSpec spec{make_vec({1, 2}), make_vec({2, 1}), 1, n};
            Json params = gap_params(spec);
            instance(c, params, [&] {
                AffineSemigroup gamma = gap_semigroup(spec);
                VarContext ctx = semigroup_context(gamma);
                BinomialIdeal minors = minors_2x2(gap_matrix(ctx, spec.h));
                MonomialOrder order = gap_local_order(ctx.size());
                std::vector<Binomial> basis =
                    buchberger(minors.gens, order, options_.cap);
                std::string fail;
                for (const Binomial& b : basis) {
                    Monomial lm = orient(b, order).plus;
                    if (total_degree(lm) != 2) fail = "non-quadratic-lm;";
                    if (lm.front() > 0 || lm.back() > 0) fail += "extremal-var-in-lm;";
                }
                if (!is_groebner(basis, order, options_.cap)) fail += "not-a-basis;";
                add(c, params, fail.empty(), fail);
            });
        }
    }

    void check_stated_basis(VerifyClaim& c) {
        for (unsigned long h : {1ul, 2ul})
            for (unsigned long n = 3; n <= 5; ++n)
                for (bool extended : {false, true}) {
                    GapSpec spec{make_vec({1, 2}), make_vec({2, 1}), h, n};
                    Json params = gap_params(spec);
                    params["ranges"] = extended ? "extended" : "literal";
                    instance(c, params, [&] {
                        AffineSemigroup gamma = gap_semigroup(spec);
                        VarContext ctx = semigroup_context(gamma);
                        BinomialIdeal minors = minors_2x2(gap_matrix(ctx, spec.h));
                        MonomialOrder order = gap_local_order(ctx.size());
                        std::vector<Binomial> stated =
                            gap_stated_basis(ctx.size(), spec.h, extended);
                        std::string detail;
                        bool contained = true;
                        for (const Binomial& b : stated)
                            if (!ideal_member(b, minors.gens, ctx.size(), options_.cap)) {
                                contained = false;
                                break;
                            }
                        if (!contained) detail += "not-contained;";
                        BinomialIdeal stated_ideal{ctx, stated};
                        bool generates =
                            contained && ideal_equal(stated_ideal, minors, options_.cap);
                        if (!generates) detail += "does-not-generate;";
                        bool gb = is_groebner(stated, order, options_.cap);
                        if (!gb) detail += "not-a-standard-basis;";
                        add(c, params, contained && generates && gb, detail);
                    });
                }
    }

    void check_initial_ideal(VerifyClaim& c) {
        for (unsigned long n = 3; n <= 6; ++n) {
            GapSpec spec{make_vec({1, 2}), make_vec({2, 1}), 1, n};
            Json params = gap_params(spec);
            instance(c, params, [&] {
                AffineSemigroup gamma = gap_semigroup(spec);
                VarContext ctx = semigroup_context(gamma);
                BinomialIdeal minors = minors_2x2(gap_matrix(ctx, spec.h));
                MonomialOrder order = gap_local_order(ctx.size());
                std::vector<Monomial> in_gens =
                    initial_ideal(minors.gens, order, options_.cap);
                // Expected minimal generators: all quadratics x_i x_j with
                // 2 <= i <= j <= n (indices avoiding both extremal variables).
                std::set<Monomial> expected;
                for (std::size_t i = 1; i + 1 < ctx.size(); ++i)
                    for (std::size_t j = i; j + 1 < ctx.size(); ++j) {
                        Monomial m(ctx.size(), 0);
                        m[i] += 1;
                        m[j] += 1;
                        expected.insert(m);
                    }
                std::set<Monomial> got(in_gens.begin(), in_gens.end());
                add(c, params, got == expected,
                    got == expected ? "" : "count=" + std::to_string(got.size()));
            });
        }
    }

    struct JoinData {
        AffineSemigroup left, right, joined;
        GapSpec s1, s2;
    };

    std::optional<JoinData> make_join(unsigned long n1, unsigned long n2, unsigned long h) {
        GapSpec s1{make_vec({1, 2}), make_vec({2, 1}), h, n1};
        GapSpec s2{make_vec({1, 3}), make_vec({1, 1}), h, n2};
        AffineSemigroup left = gap_semigroup(s1);
        AffineSemigroup right = gap_semigroup(s2);
        AffineSemigroup joined = join(left, right);
        return JoinData{std::move(left), std::move(right), std::move(joined), s1, s2};
    }

    // Embed a factor ideal into the join context (left block first).
    static std::vector<Binomial> embed_gens(const std::vector<Binomial>& gens,
                                            std::size_t total, std::size_t offset) {
        std::vector<Binomial> out;
        for (const Binomial& b : gens) {
            Binomial e;
            e.plus.assign(total, 0);
            e.minus.assign(total, 0);
            for (std::size_t i = 0; i < b.plus.size(); ++i) {
                e.plus[offset + i] = b.plus[i];
                e.minus[offset + i] = b.minus[i];
            }
            out.push_back(e);
        }
        return out;
    }

    void check_join_resolution(VerifyClaim& c) {
        for (unsigned long n1 = 2; n1 <= 4; ++n1)
            for (unsigned long n2 = 2; n2 <= 4; ++n2) {
                Json params = join_params(n1, n2, 1);
                instance(c, params, [&] {
                    auto data = make_join(n1, n2, 1);
                    VarContext ctx = semigroup_context(data->joined);
                    BinomialIdeal jt = toric_ideal(data->joined, "x", options_.cap);
                    BinomialIdeal lt = toric_ideal(data->left, "x", options_.cap);
                    BinomialIdeal rt = toric_ideal(data->right, "x", options_.cap);
                    BinomialIdeal sum;
                    sum.context = ctx;
                    for (const Binomial& b :
                         embed_gens(lt.gens, ctx.size(), 0))
                        sum.gens.push_back(b);
                    for (const Binomial& b :
                         embed_gens(rt.gens, ctx.size(), lt.context.size()))
                        sum.gens.push_back(b);
                    std::string fail;
                    if (!ideal_equal(jt, sum, options_.cap)) fail += "sum-differs;";

                    // Tensor of the factor resolutions vs the join's Betti table.
                    auto [p1, p2] = join_matrices(ctx, n1, n2, 1);
                    GradedFreeComplex c1 = eagon_northcott(p1);
                    GradedFreeComplex c2 = eagon_northcott(p2);
                    GradedFreeComplex tensor = tensor_complexes(c1, c2);
                    if (!compose_zero(tensor)) fail += "dd-nonzero;";
                    if (!is_minimal(tensor)) fail += "tensor-not-minimal;";
                    std::vector<std::size_t> conv(c1.ranks.size() + c2.ranks.size() - 1, 0);
                    for (std::size_t i = 0; i < c1.ranks.size(); ++i)
                        for (std::size_t j = 0; j < c2.ranks.size(); ++j)
                            conv[i + j] += c1.ranks[i] * c2.ranks[j];
                    if (tensor.ranks != conv) fail += "tensor-ranks;";
                    BettiTable betti = betti_semigroup(data->joined, options_.cap);
                    if (betti.totals() != conv) fail += "betti-not-convolution;";
                    add(c, params, fail.empty(), fail);
                });
            }
    }

    void check_join_cm(VerifyClaim& c) {
        for (unsigned long n1 = 2; n1 <= 4; ++n1)
            for (unsigned long n2 = 2; n2 <= 4; ++n2) {
                Json params = join_params(n1, n2, 1);
                instance(c, params, [&] {
                    auto data = make_join(n1, n2, 1);
                    BettiTable bl = betti_semigroup(data->left, options_.cap);
                    BettiTable br = betti_semigroup(data->right, options_.cap);
                    BettiTable bj = betti_semigroup(data->joined, options_.cap);
                    bool additive = bj.projective_dimension() ==
                                    bl.projective_dimension() + br.projective_dimension();
                    bool cm = is_cohen_macaulay(data->joined, options_.cap);
                    add(c, params, additive && cm,
                        additive ? (cm ? "" : "join-not-cm") : "projdim-not-additive");
                });
            }
    }

    void check_join_ideal(VerifyClaim& c) {
        for (unsigned long n1 = 2; n1 <= 4; ++n1)
            for (unsigned long n2 = 2; n2 <= 4; ++n2) {
                Json params = join_params(n1, n2, 1);
                instance(c, params, [&] {
                    auto data = make_join(n1, n2, 1);
                    VarContext ctx = semigroup_context(data->joined);
                    auto [p1, p2] = join_matrices(ctx, n1, n2, 1);
                    BinomialIdeal pair = minors_2x2_pair(p1, p2);
                    BinomialIdeal jt = toric_ideal(data->joined, "x", options_.cap);
                    std::string fail;
                    if (!ideal_equal(jt, pair, options_.cap)) fail += "minor-pair-differs;";
                    BinomialIdeal i1 = minors_2x2(p1);
                    BinomialIdeal i2 = minors_2x2(p2);
                    MonomialOrder order =
                        MonomialOrder::identity_permutation(OrderKind::DegRevLex, ctx.size());
                    if (!transversal_by_support(i1, i2, order, options_.cap))
                        fail += "not-transversal;";
                    std::vector<MonomialOrder> candidates{
                        order, join_local_order(n1, n2)};
                    if (!has_quadratic_groebner(jt, candidates, options_.cap))
                        fail += "no-quadratic-basis;";
                    add(c, params, fail.empty(), fail);
                });
            }
    }

    void check_betti_transfer(VerifyClaim& c) {
        for (unsigned long n1 = 2; n1 <= 4; ++n1)
            for (unsigned long n2 = 2; n2 <= 4; ++n2) {
                Json params = join_params(n1, n2, 1);
                instance(c, params, [&] {
                    auto data = make_join(n1, n2, 1);
                    MonomialOrder order = join_local_order(n1, n2);
                    BettiTransferReport rep =
                        betti_transfer_check(data->joined, order, options_.cap);
                    Json detail;
                    detail["ring_cm"] = rep.ring_cm;
                    detail["initial_cm"] = rep.initial_cm;
                    detail["support_condition"] = rep.support_condition;
                    detail["betti_ring"] = rep.betti_ring;
                    detail["betti_initial"] = rep.betti_initial;
                    if (!(rep.ring_cm && rep.initial_cm && rep.support_condition)) {
                        add_status(c, params, kHypothesisFailed, detail.dump());
                        return;
                    }
                    add(c, params, rep.totals_equal, detail.dump());
                });
            }
    }

    void check_associated_graded(VerifyClaim& c) {
        // gr_m(K[Gamma]) is computed as A/in(I) under the negative-degree
        // order; the identification is flagged in every detail string.
        for (unsigned long n1 = 2; n1 <= 4; ++n1)
            for (unsigned long n2 = 2; n2 <= 4; ++n2) {
                Json params = join_params(n1, n2, 1);
                instance(c, params, [&] {
                    auto data = make_join(n1, n2, 1);
                    MonomialOrder order = join_local_order(n1, n2);
                    BettiTransferReport rep =
                        betti_transfer_check(data->joined, order, options_.cap);
                    std::string flag = "gr_m-as-A/in_neg(I);";
                    if (!(rep.ring_cm && rep.support_condition)) {
                        add_status(c, params, kHypothesisFailed, flag);
                        return;
                    }
                    add(c, params, rep.totals_equal, flag);
                });
            }
    }

    void check_join_regularity(VerifyClaim& c) {
        for (unsigned long n1 = 2; n1 <= 4; ++n1)
            for (unsigned long n2 = 2; n2 <= 4; ++n2) {
                Json params = join_params(n1, n2, 1);
                instance(c, params, [&] {
                    auto data = make_join(n1, n2, 1);
                    MonomialOrder order = join_local_order(n1, n2);
                    BinomialIdeal jt = toric_ideal(data->joined, "x", options_.cap);
                    std::vector<Monomial> in_gens =
                        initial_ideal(jt.gens, order, options_.cap);
                    BettiTable graded = betti_monomial(in_gens, jt.context.size());
                    long reg = graded.regularity();
                    std::vector<std::size_t> extremal(
                        data->joined.extremal_rays().begin(),
                        data->joined.extremal_rays().end());
                    Int closed = reg_closed_form(data->joined, extremal,
                                                 options_.apery_cap);
                    bool homog = data->joined.is_homogeneous(options_.apery_cap);
                    std::string detail = "reg=" + std::to_string(reg) +
                                         " closed=" + closed.get_str() +
                                         (homog ? "" : " not-homogeneous");
                    bool ok = homog && reg == 2 && closed == 2;
                    BettiTable ring = betti_semigroup(data->joined, options_.cap);
                    if (ring.totals() != graded.totals()) {
                        ok = false;
                        detail += " betti-differs";
                    }
                    add(c, params, ok, detail);
                });
            }
    }

    void check_backelin(VerifyClaim& c) {
        Json params;
        params["n"] = 2;
        params["r"] = 8;
        if (!options_.slow) {
            add_status(c, params, kSkippedSlow, "enable with --slow");
            return;
        }
        instance(c, params, [&] {
            AffineSemigroup gamma = backelin_projective(2, 8);
            VarContext ctx = semigroup_context(gamma, "z");
            // Reverse-degree-lex order induced by z2 > z3 > z4 > z5 > z1
            // (z1 and z5 are the extremal-ray variables).
            MonomialOrder order =
                MonomialOrder::with_permutation(OrderKind::DegRevLex, {1, 2, 3, 4, 0});
            BinomialIdeal ideal = toric_ideal(gamma, "z", options_.cap);
            std::vector<Binomial> basis = buchberger(ideal.gens, order, options_.cap);
            std::string fail;
            for (const Binomial& b : basis) {
                bool has1 = b.plus[0] > 0 || b.minus[0] > 0;
                bool has5 = b.plus[4] > 0 || b.minus[4] > 0;
                if (!has1 || !has5) {
                    fail = "support-misses-extremal-variable;";
                    break;
                }
            }
            BettiTransferReport rep = betti_transfer_check(gamma, order, options_.cap);
            Json detail;
            detail["support"] = fail.empty();
            detail["ring_cm"] = rep.ring_cm;
            detail["initial_cm"] = rep.initial_cm;
            detail["support_condition"] = rep.support_condition;
            detail["betti_ring"] = rep.betti_ring;
            detail["betti_initial"] = rep.betti_initial;
            add(c, params, fail.empty() && rep.totals_equal, detail.dump());
        });
    }
};

}  // namespace

std::vector<VerifyClaim> verify_suite(const VerifyOptions& options) {
    return Suite(options).run();
}

bool all_verified(const std::vector<VerifyClaim>& claims) {
    for (const auto& c : claims)
        for (const auto& inst : c.instances)
            if (inst.status == "refuted") return false;
    return true;
}

}  // namespace forge
