#include "forge/groebner.hpp"

#include <algorithm>
#include <set>

#include "forge/error.hpp"

namespace forge {

void BinomialIdeal::check_homogeneous() const {
    if (context.degree_map.empty()) return;
    for (const auto& b : gens)
        if (context.gamma_degree(b.plus) != context.gamma_degree(b.minus))
            throw Error("not-homogeneous", "generator " + context.render(b.plus) + " - " +
                                               context.render(b.minus) +
                                               " is not Gamma-homogeneous");
}

std::optional<Binomial> spoly(const Binomial& f, const Binomial& g,
                              const MonomialOrder& order) {
    Binomial fo = orient(f, order), go = orient(g, order);
    Monomial l = mono_lcm(fo.plus, go.plus);
    // (l/LM f) f - (l/LM g) g = (l/LM g) tail(g) - (l/LM f) tail(f).
    Monomial p = mono_mul(mono_div(l, go.plus), go.minus);
    Monomial m = mono_mul(mono_div(l, fo.plus), fo.minus);
    if (p == m) return std::nullopt;
    return orient(Binomial{p, m}, order);
}

namespace {

int ecart(const Binomial& oriented) {
    return total_degree(oriented.minus) - total_degree(oriented.plus);
}

// Orientation swaps plus/minus, which negates the represented polynomial;
// the trace invariant f = sum coeffs_i g_i + s * (h.plus - h.minus) carries
// the sign s explicitly.
struct SignedOrient {
    Binomial b;
    Int sign;
};

SignedOrient signed_orient(const Binomial& b, const MonomialOrder& order) {
    if (compare(order, b.plus, b.minus) >= 0) return {b, 1};
    return {Binomial{b.minus, b.plus}, -1};
}

// Division for global orders: reduce the leading and then the trailing term
// until neither is divisible by any LM(g).
std::optional<Binomial> normal_form_global(const Binomial& f, const std::vector<Binomial>& g,
                                           const MonomialOrder& order, std::size_t cap,
                                           DivisionTrace* trace) {
    std::size_t nvars = f.plus.size();
    std::vector<SignedOrient> basis(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) basis[i] = signed_orient(g[i], order);
    if (trace) {
        trace->unit = Poly::constant(nvars, 1);
        trace->coeffs.assign(g.size(), Poly(nvars));
    }

    auto [h, s] = signed_orient(f, order);
    auto reorient = [&](Monomial plus, Monomial minus) {
        if (compare(order, plus, minus) >= 0) {
            h = Binomial{std::move(plus), std::move(minus)};
        } else {
            h = Binomial{std::move(minus), std::move(plus)};
            s = -s;
        }
    };
    std::size_t steps = 0;
    for (;;) {
        if (++steps > cap) throw Error("iteration-cap-exceeded", "division step cap");
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!divides(basis[i].b.plus, h.plus)) continue;
            Monomial m = mono_div(h.plus, basis[i].b.plus);
            // s*h := s*h - s*m * basis[i].b
            if (trace) trace->coeffs[i] += Poly::monomial(m, s * basis[i].sign);
            Monomial np = mono_mul(m, basis[i].b.minus);
            if (np == h.minus) return std::nullopt;
            reorient(std::move(np), h.minus);
            reduced = true;
            break;
        }
        if (reduced) continue;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!divides(basis[i].b.plus, h.minus)) continue;
            Monomial m = mono_div(h.minus, basis[i].b.plus);
            // s*h := s*h + s*m * basis[i].b  (cancels the trailing term)
            if (trace) trace->coeffs[i] -= Poly::monomial(m, s * basis[i].sign);
            Monomial nm = mono_mul(m, basis[i].b.minus);
            if (nm == h.plus) return std::nullopt;
            reorient(h.plus, std::move(nm));
            reduced = true;
            break;
        }
        if (!reduced) return s > 0 ? h : Binomial{h.minus, h.plus};
    }
}

// Mora weak normal form with ecart-minimal divisor selection. Intermediate
// remainders join the divisor pool; their provenance is tracked so the trace
// certificate u*f = sum a_i g_i + r stays exact.
std::optional<Binomial> normal_form_mora(const Binomial& f, const std::vector<Binomial>& g,
                                         const MonomialOrder& order, std::size_t cap,
                                         DivisionTrace* trace) {
    std::size_t nvars = f.plus.size();
    struct PoolEntry {
        Binomial b;        // oriented; b_poly = unit * f - sum coeffs_i g_i
        Int sign;          // input entries: b_poly = sign * g[input_index]
        Poly unit;
        std::vector<Poly> coeffs;
        bool from_input;
        std::size_t input_index;
    };
    std::vector<PoolEntry> pool;
    for (std::size_t i = 0; i < g.size(); ++i) {
        SignedOrient so = signed_orient(g[i], order);
        pool.push_back({so.b, so.sign, Poly(nvars), {}, true, i});
    }

    // Invariant: unit * f = sum coeffs_i g_i + s * (h.plus - h.minus).
    auto [h, s] = signed_orient(f, order);
    Poly unit = Poly::constant(nvars, 1);
    std::vector<Poly> coeffs(trace ? g.size() : 0, Poly(nvars));
    auto store = [&] {
        if (trace) {
            trace->unit = unit;
            trace->coeffs = coeffs;
        }
    };

    std::size_t steps = 0;
    for (;;) {
        if (++steps > cap) throw Error("iteration-cap-exceeded", "Mora reduction cap");
        std::size_t best = pool.size();
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (!divides(pool[i].b.plus, h.plus)) continue;
            if (best == pool.size() || ecart(pool[i].b) < ecart(pool[best].b)) best = i;
        }
        if (best == pool.size()) {
            store();
            return s > 0 ? h : Binomial{h.minus, h.plus};
        }
        if (ecart(pool[best].b) > ecart(h)) {
            PoolEntry e{h, 1, Poly(nvars), {}, false, 0};
            if (trace) {
                // h_poly = (s*unit) f - sum (s*coeffs_i) g_i.
                Poly sp = Poly::constant(nvars, s);
                e.unit = sp * unit;
                for (const Poly& cf : coeffs) e.coeffs.push_back(sp * cf);
            }
            pool.push_back(std::move(e));
        }
        const PoolEntry& d = pool[best];
        Monomial m = mono_div(h.plus, d.b.plus);
        // s*h := s*h - s*m * d.b_poly.
        if (trace) {
            if (d.from_input) {
                coeffs[d.input_index] += Poly::monomial(m, s * d.sign);
            } else {
                Poly mp = Poly::monomial(m, s);
                unit -= mp * d.unit;
                for (std::size_t i = 0; i < coeffs.size(); ++i)
                    coeffs[i] -= mp * d.coeffs[i];
            }
        }
        Monomial np = mono_mul(m, d.b.minus);
        if (np == h.minus) {
            store();
            return std::nullopt;
        }
        if (compare(order, np, h.minus) >= 0) {
            h = Binomial{std::move(np), h.minus};
        } else {
            h = Binomial{h.minus, std::move(np)};
            s = -s;
        }
    }
}

}  // namespace

std::optional<Binomial> normal_form(const Binomial& f, const std::vector<Binomial>& g,
                                    const MonomialOrder& order, std::size_t cap,
                                    DivisionTrace* trace) {
    if (f.plus == f.minus) return std::nullopt;
    if (order.is_local()) return normal_form_mora(f, g, order, cap, trace);
    return normal_form_global(f, g, order, cap, trace);
}

namespace {

struct PairEntry {
    int lcm_degree;
    Monomial lcm;
    std::size_t i, j;
    bool operator<(const PairEntry& other) const {
        if (lcm_degree != other.lcm_degree) return lcm_degree < other.lcm_degree;
        if (lcm != other.lcm) return lcm < other.lcm;
        if (i != other.i) return i < other.i;
        return j < other.j;
    }
};

void tail_reduce(std::vector<Binomial>& basis, const MonomialOrder& order, std::size_t cap) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
        std::size_t steps = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if (i == k || !divides(basis[i].plus, basis[k].minus)) continue;
                if (++steps > cap) throw Error("iteration-cap-exceeded", "tail reduction cap");
                Monomial m = mono_div(basis[k].minus, basis[i].plus);
                Monomial nm = mono_mul(m, basis[i].minus);
                // Tails of oriented elements are order-smaller, so the
                // replacement strictly decreases and terminates.
                basis[k].minus = nm;
                changed = true;
                break;
            }
        }
    }
}

}  // namespace

std::vector<Binomial> buchberger(std::vector<Binomial> gens, const MonomialOrder& order,
                                 std::size_t cap) {
    std::vector<Binomial> basis;
    {
        std::set<Binomial> seen;
        for (const auto& b : gens) {
            if (b.plus == b.minus) continue;
            Binomial o = orient(b, order);
            if (seen.insert(canonical(o)).second) basis.push_back(o);
        }
    }

    std::set<PairEntry> pairs;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = mono_lcm(basis[i].plus, basis[j].plus);
            pairs.insert({total_degree(l), l, i, j});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(j);

    std::size_t steps = 0;
    while (!pairs.empty()) {
        PairEntry p = *pairs.begin();
        pairs.erase(pairs.begin());
        if (++steps > cap) throw Error("iteration-cap-exceeded", "completion cap");
        // Product criterion (global orders only).
        if (!order.is_local() && coprime(basis[p.i].plus, basis[p.j].plus)) continue;
        auto s = spoly(basis[p.i], basis[p.j], order);
        if (!s) continue;
        auto r = normal_form(*s, basis, order, cap);
        if (!r) continue;
        basis.push_back(orient(*r, order));
        push_pairs(basis.size() - 1);
    }

    // Minimalize: keep only elements whose leading monomial is not divisible
    // by another kept leading monomial.
    std::vector<Binomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (divides(basis[j].plus, basis[i].plus) && basis[j].plus != basis[i].plus) {
                keep = false;
                break;
            }
            if (basis[j].plus == basis[i].plus && j < i) {
                keep = false;
                break;
            }
        }
        if (keep) minimal.push_back(basis[i]);
    }

    tail_reduce(minimal, order, cap);

    // Dedupe after tail reduction and drop elements that became zero.
    {
        std::set<Binomial> seen;
        std::vector<Binomial> out;
        for (const auto& b : minimal) {
            if (b.plus == b.minus) continue;
            if (seen.insert(canonical(b)).second) out.push_back(b);
        }
        minimal = std::move(out);
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Binomial& a, const Binomial& b) {
        int c = compare(order, a.plus, b.plus);
        if (c != 0) return c < 0;
        return a.minus < b.minus;
    });
    return minimal;
}

bool is_groebner(const std::vector<Binomial>& g, const MonomialOrder& order, std::size_t cap,
                 GroebnerCertificate* cert) {
    std::vector<Binomial> basis(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) basis[i] = orient(g[i], order);
    if (cert) *cert = GroebnerCertificate{};
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            auto s = spoly(basis[i], basis[j], order);
            if (cert) ++cert->pairs_checked;
            if (!s) continue;
            auto r = normal_form(*s, basis, order, cap);
            if (r) {
                if (cert) {
                    cert->ok = false;
                    cert->failing_i = i;
                    cert->failing_j = j;
                    cert->failing_remainder = r;
                }
                return false;
            }
        }
    }
    return true;
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> monomials) {
    std::sort(monomials.begin(), monomials.end());
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    std::vector<Monomial> minimal;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < monomials.size(); ++j) {
            if (i == j) continue;
            if (divides(monomials[j], monomials[i]) && monomials[j] != monomials[i]) {
                keep = false;
                break;
            }
        }
        if (keep) minimal.push_back(monomials[i]);
    }
    return minimal;
}

std::vector<Monomial> initial_ideal(const std::vector<Binomial>& gens,
                                    const MonomialOrder& order, std::size_t cap) {
    auto basis = buchberger(gens, order, cap);
    std::vector<Monomial> lms;
    for (const auto& b : basis) lms.push_back(b.plus);
    return minimalize_monomials(lms);
}

bool ideal_member(const Binomial& f, const std::vector<Binomial>& gens, std::size_t nvars,
                  std::size_t cap) {
    if (f.plus == f.minus) return true;
    if (gens.empty()) return false;
    auto order = MonomialOrder::identity_permutation(OrderKind::DegRevLex, nvars);
    auto basis = buchberger(gens, order, cap);
    return !normal_form(f, basis, order, cap).has_value();
}

bool ideal_equal(const BinomialIdeal& i, const BinomialIdeal& j, std::size_t cap) {
    if (i.context.size() != j.context.size())
        throw Error("dimension-mismatch", "ideals in different contexts");
    auto order = MonomialOrder::identity_permutation(OrderKind::DegRevLex, i.context.size());
    auto gi = buchberger(i.gens, order, cap);
    auto gj = buchberger(j.gens, order, cap);
    std::set<Binomial> si, sj;
    for (const auto& b : gi) si.insert(canonical(b));
    for (const auto& b : gj) sj.insert(canonical(b));
    return si == sj;
}

std::vector<Binomial> minimal_generators(std::vector<Binomial> gens, std::size_t nvars,
                                         std::size_t cap) {
    // Prefer discarding higher-degree generators first.
    std::stable_sort(gens.begin(), gens.end(), [](const Binomial& a, const Binomial& b) {
        return total_degree(a.plus) < total_degree(b.plus);
    });
    for (std::size_t k = gens.size(); k-- > 0;) {
        std::vector<Binomial> rest;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (i != k) rest.push_back(gens[i]);
        if (ideal_member(gens[k], rest, nvars, cap)) gens = std::move(rest);
    }
    return gens;
}

}  // namespace forge
