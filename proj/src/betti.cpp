#include "forge/betti.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "forge/error.hpp"
#include "forge/linalg.hpp"

namespace forge {

std::vector<std::size_t> BettiTable::totals() const {
    std::vector<std::size_t> t;
    for (const auto& [key, value] : entries) {
        if (key.first >= t.size()) t.resize(key.first + 1, 0);
        t[key.first] += value;
    }
    while (!t.empty() && t.back() == 0) t.pop_back();
    return t;
}

std::size_t BettiTable::projective_dimension() const {
    auto t = totals();
    return t.empty() ? 0 : t.size() - 1;
}

long BettiTable::regularity() const {
    long reg = 0;
    for (const auto& [key, value] : entries) {
        long total = 0;
        for (const Int& e : key.second) total += static_cast<long>(e.get_si());
        long slope = total - static_cast<long>(key.first);
        if (slope > reg) reg = slope;
    }
    return reg;
}

namespace {

IntVec exponent_label(const Monomial& m) {
    IntVec v;
    v.reserve(m.size());
    for (int e : m) v.emplace_back(e);
    return v;
}

// Boundary rank of the Taylor strand maps d_k: C_k -> C_{k-1} restricted to
// subsets with the same lcm. `masks` share one lcm; `level[k]` holds the
// masks of popcount k in index order.
std::size_t strand_rank(const std::vector<unsigned>& from, const std::vector<unsigned>& to,
                        const std::vector<Monomial>& lcm_of, const Monomial& target) {
    if (from.empty() || to.empty()) return 0;
    std::map<unsigned, std::size_t> to_index;
    for (std::size_t i = 0; i < to.size(); ++i) to_index[to[i]] = i;
    RatMat mat(to.size(), from.size());
    for (std::size_t col = 0; col < from.size(); ++col) {
        unsigned s = from[col];
        int pos = 0;
        for (unsigned bits = s; bits != 0; bits &= bits - 1, ++pos) {
            unsigned low = bits & (~bits + 1);
            unsigned face = s & ~low;
            if (lcm_of[face] != target) continue;
            auto it = to_index.find(face);
            if (it == to_index.end()) continue;
            mat.at(it->second, col) = (pos % 2 == 0) ? Rat(1) : Rat(-1);
        }
    }
    return rank_rational(mat);
}

}  // namespace

BettiTable betti_monomial(const std::vector<Monomial>& gens, std::size_t nvars) {
    if (gens.size() > 22)
        throw Error("too-many-generators",
                    "Taylor strand enumeration is capped at 22 generators");
    BettiTable table;
    table.add(0, IntVec(nvars, Int(0)), 1);
    const std::size_t g = gens.size();
    if (g == 0) return table;

    const unsigned full = (g == 32) ? ~0u : ((1u << g) - 1);
    std::vector<Monomial> lcm_of(static_cast<std::size_t>(full) + 1, Monomial(nvars, 0));
    std::map<Monomial, std::vector<unsigned>> buckets;
    for (unsigned s = 1; s <= full; ++s) {
        unsigned low = s & (~s + 1);
        int idx = std::countr_zero(low);
        lcm_of[s] = mono_lcm(lcm_of[s & ~low], gens[static_cast<std::size_t>(idx)]);
        buckets[lcm_of[s]].push_back(s);
    }

    for (const auto& [deg, masks] : buckets) {
        std::vector<std::vector<unsigned>> level(g + 1);
        for (unsigned s : masks) level[static_cast<std::size_t>(std::popcount(s))].push_back(s);
        // beta_{k,deg} = dim C_k - rank d_k - rank d_{k+1}; subsets of size k
        // sit in homological position k.
        std::vector<std::size_t> rank_down(g + 2, 0);
        for (std::size_t k = 2; k <= g; ++k)
            rank_down[k] = strand_rank(level[k], level[k - 1], lcm_of, deg);
        for (std::size_t k = 1; k <= g; ++k) {
            std::size_t dim = level[k].size();
            if (dim == 0) continue;
            std::size_t h = dim - rank_down[k] - rank_down[k + 1];
            table.add(k, exponent_label(deg), h);
        }
    }
    return table;
}

std::size_t monomial_quotient_dimension(const std::vector<Monomial>& gens,
                                        std::size_t nvars) {
    if (nvars > 30) throw Error("too-many-generators", "variable count above subset limit");
    std::size_t best = 0;
    for (unsigned s = 0; s < (1u << nvars); ++s) {
        bool ok = true;
        for (const Monomial& m : gens) {
            bool inside = true;
            for (std::size_t i = 0; i < nvars; ++i)
                if (m[i] > 0 && !(s & (1u << i))) {
                    inside = false;
                    break;
                }
            if (inside) {  // the generator survives on this coordinate subspace
                ok = false;
                break;
            }
        }
        if (ok) best = std::max(best, static_cast<std::size_t>(std::popcount(s)));
    }
    return best;
}

namespace {

// Simplicial divisor complex of gamma at degree `deg`: faces F with
// deg - sum_{i in F} a_i in Gamma. Returns all faces including the empty set
// when deg itself is a member; nullopt when deg is not a member.
std::optional<std::vector<std::vector<std::size_t>>> divisor_complex(
    const AffineSemigroup& gamma, const IntVec& deg) {
    if (!gamma.contains(deg)) return std::nullopt;
    const auto& gens = gamma.gens();
    std::vector<std::vector<std::size_t>> faces;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start, const IntVec& rest) -> void {
        faces.push_back(cur);
        for (std::size_t i = start; i < gens.size(); ++i) {
            IntVec next = rest - gens[i];
            bool neg = false;
            for (const Int& e : next)
                if (e < 0) {
                    neg = true;
                    break;
                }
            if (neg || !gamma.contains(next)) continue;
            cur.push_back(i);
            self(self, i + 1, next);
            cur.pop_back();
        }
    };
    rec(rec, 0, deg);
    return faces;
}

// True when some vertex cones the whole complex (then all reduced homology
// vanishes and the rank computation can be skipped).
bool is_cone(const std::vector<std::vector<std::size_t>>& faces) {
    std::set<std::vector<std::size_t>> face_set(faces.begin(), faces.end());
    std::set<std::size_t> vertices;
    for (const auto& f : faces)
        if (f.size() == 1) vertices.insert(f[0]);
    for (std::size_t v : vertices) {
        bool apex = true;
        for (const auto& f : faces) {
            if (std::binary_search(f.begin(), f.end(), v)) continue;
            std::vector<std::size_t> with = f;
            with.insert(std::upper_bound(with.begin(), with.end(), v), v);
            if (!face_set.count(with)) {
                apex = false;
                break;
            }
        }
        if (apex) return true;
    }
    return false;
}

// Reduced homology ranks of the complex given by its face list.
std::vector<std::size_t> complex_homology(const std::vector<std::vector<std::size_t>>& faces) {
    std::size_t top = 0;
    for (const auto& f : faces) top = std::max(top, f.size());
    if (top == 0) return {};
    std::vector<std::vector<std::vector<std::size_t>>> level(top + 1);
    for (const auto& f : faces)
        if (!f.empty()) level[f.size()].push_back(f);
    for (auto& l : level) std::sort(l.begin(), l.end());

    std::vector<RatMat> boundaries;
    // Augmentation C_0 -> C_{-1}.
    {
        RatMat aug(1, level[1].size());
        for (std::size_t c = 0; c < level[1].size(); ++c) aug.at(0, c) = Rat(1);
        boundaries.push_back(aug);
    }
    for (std::size_t k = 2; k <= top; ++k) {
        std::map<std::vector<std::size_t>, std::size_t> index;
        for (std::size_t i = 0; i < level[k - 1].size(); ++i) index[level[k - 1][i]] = i;
        RatMat d(level[k - 1].size(), level[k].size());
        for (std::size_t c = 0; c < level[k].size(); ++c) {
            const auto& f = level[k][c];
            for (std::size_t t = 0; t < f.size(); ++t) {
                std::vector<std::size_t> face = f;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(t));
                d.at(index.at(face), c) = (t % 2 == 0) ? Rat(1) : Rat(-1);
            }
        }
        boundaries.push_back(d);
    }
    return reduced_homology_ranks(boundaries);
}

}  // namespace

BettiTable betti_semigroup(const AffineSemigroup& gamma, std::size_t cap) {
    BettiTable table;
    const std::size_t r = gamma.ambient_dim();
    table.add(0, IntVec(r, Int(0)), 1);

    BinomialIdeal ideal = toric_ideal(gamma, "x", cap);
    auto order = MonomialOrder::identity_permutation(OrderKind::DegRevLex,
                                                     ideal.context.size());
    std::vector<Monomial> in_gens = initial_ideal(ideal.gens, order, cap);
    if (in_gens.size() > 22)
        throw Error("too-many-generators",
                    "initial ideal too large for lcm-lattice enumeration");

    // Candidate degrees: Gamma-degrees of lcms of subsets of in(I)'s
    // generators. Every nonzero Betti degree of K[Gamma] appears among them
    // by upper-semicontinuity under the flat degeneration to the initial ideal.
    std::set<IntVec> candidates;
    const std::size_t g = in_gens.size();
    if (g > 0) {
        const unsigned full = (1u << g) - 1;
        std::vector<Monomial> lcm_of(static_cast<std::size_t>(full) + 1,
                                     Monomial(ideal.context.size(), 0));
        for (unsigned s = 1; s <= full; ++s) {
            unsigned low = s & (~s + 1);
            int idx = std::countr_zero(low);
            lcm_of[s] = mono_lcm(lcm_of[s & ~low], in_gens[static_cast<std::size_t>(idx)]);
            candidates.insert(ideal.context.gamma_degree(lcm_of[s]));
        }
    }

    for (const IntVec& deg : candidates) {
        auto faces = divisor_complex(gamma, deg);
        if (!faces) continue;
        if (is_cone(*faces)) continue;
        auto h = complex_homology(*faces);
        // beta_{i, deg} = dim H~_{i-1}(Delta_deg).
        for (std::size_t k = 0; k < h.size(); ++k) table.add(k + 1, deg, h[k]);
    }
    return table;
}

bool is_cohen_macaulay(const AffineSemigroup& gamma, std::size_t cap) {
    BettiTable t = betti_semigroup(gamma, cap);
    return t.projective_dimension() == gamma.gens().size() - gamma.dim();
}

std::size_t cm_type(const AffineSemigroup& gamma, std::size_t cap) {
    BettiTable t = betti_semigroup(gamma, cap);
    if (t.projective_dimension() != gamma.gens().size() - gamma.dim())
        throw Error("not-cm", "semigroup ring is not Cohen-Macaulay");
    auto totals = t.totals();
    return totals.empty() ? 0 : totals.back();
}

BettiTransferReport betti_transfer_check(const AffineSemigroup& gamma,
                                         const MonomialOrder& order,
                                         std::size_t cap, bool per_element_witness) {
    BettiTransferReport rep;
    BinomialIdeal ideal = toric_ideal(gamma, "x", cap);
    std::vector<Binomial> basis = buchberger(ideal.gens, order, cap);
    std::vector<Monomial> in_gens;
    for (const auto& b : basis) in_gens.push_back(orient(b, order).plus);
    in_gens = minimalize_monomials(in_gens);

    BettiTable ring = betti_semigroup(gamma, cap);
    rep.betti_ring = ring.totals();
    rep.ring_cm =
        ring.projective_dimension() == gamma.gens().size() - gamma.dim();

    BettiTable initial = betti_monomial(in_gens, ideal.context.size());
    rep.betti_initial = initial.totals();
    std::size_t qdim = monomial_quotient_dimension(in_gens, ideal.context.size());
    rep.initial_cm =
        initial.projective_dimension() == ideal.context.size() - qdim;

    if (per_element_witness) {
        bool all = true;
        for (const auto& b : basis) {
            Binomial ob = orient(b, order);
            bool some = false;
            for (std::size_t e : gamma.extremal_rays())
                if (ob.plus[e] == 0 && ob.minus[e] > 0) some = true;
            if (!some) {
                all = false;
                break;
            }
        }
        rep.support_condition = all;
    } else {
        for (std::size_t e : gamma.extremal_rays()) {
            bool good = true;
            for (const auto& b : basis) {
                Binomial ob = orient(b, order);
                if (ob.plus[e] > 0 || (ob.plus[e] == 0 && ob.minus[e] == 0)) {
                    good = false;
                    break;
                }
            }
            if (good) {
                rep.support_condition = true;
                rep.witness_variable = e;
                break;
            }
        }
    }
    rep.totals_equal = rep.betti_ring == rep.betti_initial;
    return rep;
}

Int reg_closed_form(const AffineSemigroup& gamma, const std::vector<std::size_t>& extremal,
                    std::size_t cap) {
    std::set<std::size_t> e(extremal.begin(), extremal.end());
    AperySet ap = gamma.apery_set(e.empty() ? gamma.extremal_rays() : e, cap);
    Int best = 0;
    for (const IntVec& w : ap.elements) {
        Int o = gamma.ord(w);
        if (o > best) best = o;
    }
    return best;
}

}  // namespace forge
