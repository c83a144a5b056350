#include "forge/constructors.hpp"

#include <algorithm>

#include "forge/linalg.hpp"

namespace forge {

IntVec GapSpec::generator(unsigned long i) const {
    if (i == 0) return a;
    return Int(h) * a + Int(i) * d;
}

std::vector<IntVec> GapSpec::generators() const {
    std::vector<IntVec> gens;
    for (unsigned long i = 0; i <= n; ++i) gens.push_back(generator(i));
    return gens;
}

AffineSemigroup gap_semigroup(const GapSpec& spec) {
    if (spec.h < 1 || spec.n < 2)
        throw Error("parameter-out-of-range", "need h >= 1 and n >= 2");
    if (spec.a.size() != spec.d.size())
        throw Error("dimension-mismatch", "a and d of unequal length");
    if (rank_rational(RatMat::from_int_columns({spec.a, spec.d})) != 2)
        throw Error("dependent-a-d", "a and d are linearly dependent over Q");
    return AffineSemigroup(spec.generators());
}

AperySet gap_apery_closed_form(const GapSpec& spec, const AffineSemigroup& parent) {
    std::vector<IntVec> elements;
    elements.push_back(IntVec(spec.ambient(), Int(0)));
    for (unsigned long i = 1; i < spec.n; ++i) elements.push_back(spec.generator(i));
    sort_vectors(elements);
    return AperySet{&parent, std::move(elements), parent.extremal_rays(), true};
}

QFReport gap_qf_closed_form(const GapSpec& spec) {
    QFReport report;
    for (unsigned long j = 1; j < spec.n; ++j)
        report.qf_elements.push_back(negate(spec.a + Int(j) * spec.d));
    sort_vectors(report.qf_elements);
    report.type_count = report.qf_elements.size();
    return report;
}

std::vector<IntVec> block_embed(const std::vector<IntVec>& left,
                                const std::vector<IntVec>& right) {
    std::size_t r1 = left.empty() ? 0 : left[0].size();
    std::size_t r2 = right.empty() ? 0 : right[0].size();
    std::vector<IntVec> gens;
    for (const auto& g : left) {
        IntVec v = g;
        v.resize(r1 + r2, Int(0));
        gens.push_back(v);
    }
    for (const auto& g : right) {
        IntVec v(r1, Int(0));
        v.insert(v.end(), g.begin(), g.end());
        gens.push_back(v);
    }
    return gens;
}

AffineSemigroup join(const AffineSemigroup& left, const AffineSemigroup& right) {
    auto gens = block_embed(left.gens(), right.gens());
    std::vector<IntVec> extremal;
    for (std::size_t i : left.extremal_rays()) extremal.push_back(gens[i]);
    for (std::size_t i : right.extremal_rays()) extremal.push_back(gens[left.gens().size() + i]);
    if (rank_rational(RatMat::from_int_columns(extremal)) != extremal.size())
        throw Error("dependent-extremal-rays",
                    "union of extremal rays is linearly dependent over Q");
    return AffineSemigroup(std::move(gens));
}

AperySet join_apery_closed_form(const GapSpec& s1, const GapSpec& s2,
                                const AffineSemigroup& parent) {
    if (s1.h != s2.h)
        throw Error("parameter-out-of-range", "closed form requires equal h per block");
    std::size_t r1 = s1.ambient(), r2 = s2.ambient();
    auto embed1 = [&](const IntVec& v) {
        IntVec w = v;
        w.resize(r1 + r2, Int(0));
        return w;
    };
    auto embed2 = [&](const IntVec& v) {
        IntVec w(r1, Int(0));
        w.insert(w.end(), v.begin(), v.end());
        return w;
    };
    std::vector<IntVec> block1{IntVec(r1 + r2, Int(0))};
    for (unsigned long i = 1; i < s1.n; ++i) block1.push_back(embed1(s1.generator(i)));
    std::vector<IntVec> block2{IntVec(r1 + r2, Int(0))};
    for (unsigned long j = 1; j < s2.n; ++j) block2.push_back(embed2(s2.generator(j)));

    std::set<IntVec> elements;
    for (const auto& u : block1)
        for (const auto& v : block2) elements.insert(u + v);
    std::vector<IntVec> out(elements.begin(), elements.end());
    return AperySet{&parent, std::move(out), parent.extremal_rays(), true};
}

AffineSemigroup backelin_projective(unsigned long n, unsigned long r) {
    if (n < 2 || r < 3 * n + 2)
        throw Error("parameter-out-of-range", "need n >= 2 and r >= 3n+2");
    Int s = Int(r) * Int(3 * n + 2) + 3;
    Int k = Int(3 * n + 2);
    std::vector<IntVec> gens{
        {Int(0), s + k}, {s, k}, {s + 3, k - 3}, {s + k - 1, Int(1)}, {s + k, Int(0)}};
    return AffineSemigroup(std::move(gens));
}

}  // namespace forge
