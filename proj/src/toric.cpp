#include "forge/toric.hpp"

#include <algorithm>
#include <limits>

#include "forge/error.hpp"

namespace forge {

VarContext semigroup_context(const AffineSemigroup& gamma, const std::string& prefix) {
    VarContext ctx;
    for (std::size_t i = 0; i < gamma.gens().size(); ++i)
        ctx.names.push_back(prefix + std::to_string(i + 1));
    ctx.degree_map = gamma.gens();
    return ctx;
}

StructuredMatrix gap_matrix(const VarContext& context, unsigned long h) {
    std::size_t nvars = context.size();
    if (nvars < 3) throw Error("bad-shape", "need at least 3 variables");
    std::size_t n = nvars - 1;
    StructuredMatrix p;
    p.context = context;
    auto var = [&](std::size_t i, int e) {
        Monomial m(nvars, 0);
        m[i] = e;
        return m;
    };
    for (std::size_t col = 0; col < n; ++col) {
        p.top.push_back(col == 0 ? var(0, static_cast<int>(h)) : var(col, 1));
        p.bottom.push_back(var(col + 1, 1));
    }
    return p;
}

std::pair<StructuredMatrix, StructuredMatrix> join_matrices(const VarContext& context,
                                                            unsigned long n1, unsigned long n2,
                                                            unsigned long h) {
    std::size_t nvars = context.size();
    if (nvars != n1 + n2 + 2) throw Error("bad-shape", "context size mismatch");
    auto var = [&](std::size_t i, int e) {
        Monomial m(nvars, 0);
        m[i] = e;
        return m;
    };
    StructuredMatrix p1, p2;
    p1.context = context;
    p2.context = context;
    for (unsigned long col = 0; col < n1; ++col) {
        p1.top.push_back(col == 0 ? var(0, static_cast<int>(h)) : var(col, 1));
        p1.bottom.push_back(var(col + 1, 1));
    }
    std::size_t off = n1 + 1;
    for (unsigned long col = 0; col < n2; ++col) {
        p2.top.push_back(col == 0 ? var(off, static_cast<int>(h)) : var(off + col, 1));
        p2.bottom.push_back(var(off + col + 1, 1));
    }
    return {p1, p2};
}

BinomialIdeal minors_2x2(const StructuredMatrix& p) {
    if (p.top.size() != p.bottom.size() || p.top.size() < 1)
        throw Error("bad-shape", "rows of unequal or zero length");
    BinomialIdeal ideal;
    ideal.context = p.context;
    for (std::size_t i = 0; i < p.width(); ++i) {
        for (std::size_t j = i + 1; j < p.width(); ++j) {
            Monomial plus = mono_mul(p.top[i], p.bottom[j]);
            Monomial minus = mono_mul(p.top[j], p.bottom[i]);
            if (plus != minus) ideal.gens.push_back(canonical(Binomial{plus, minus}));
        }
    }
    ideal.check_homogeneous();
    return ideal;
}

BinomialIdeal minors_2x2_pair(const StructuredMatrix& p1, const StructuredMatrix& p2) {
    BinomialIdeal i1 = minors_2x2(p1), i2 = minors_2x2(p2);
    BinomialIdeal out = i1;
    out.gens.insert(out.gens.end(), i2.gens.begin(), i2.gens.end());
    return out;
}

BinomialIdeal toric_ideal(const AffineSemigroup& gamma, const std::string& prefix,
                          std::size_t cap) {
    std::size_t r = gamma.ambient_dim();
    std::size_t m = gamma.gens().size();
    // Elimination context t_1..t_r, z_1..z_m with the t-block eliminated.
    std::size_t nvars = r + m;
    std::vector<Binomial> gens;
    for (std::size_t i = 0; i < m; ++i) {
        Monomial z(nvars, 0), t(nvars, 0);
        z[r + i] = 1;
        for (std::size_t c = 0; c < r; ++c) {
            if (gamma.gens()[i][c] > std::numeric_limits<int>::max() / 2)
                throw Error("parameter-out-of-range", "generator entry too large");
            t[c] = static_cast<int>(gamma.gens()[i][c].get_si());
        }
        gens.push_back(Binomial{z, t});
    }
    MonomialOrder order = MonomialOrder::block_elimination(nvars, r);
    auto basis = buchberger(gens, order, cap);

    BinomialIdeal ideal;
    ideal.context = semigroup_context(gamma, prefix);
    for (const auto& b : basis) {
        bool pure_z = true;
        for (std::size_t c = 0; c < r; ++c)
            if (b.plus[c] != 0 || b.minus[c] != 0) {
                pure_z = false;
                break;
            }
        if (!pure_z) continue;
        Monomial plus(b.plus.begin() + r, b.plus.end());
        Monomial minus(b.minus.begin() + r, b.minus.end());
        ideal.gens.push_back(canonical(Binomial{plus, minus}));
    }
    ideal.gens = minimal_generators(ideal.gens, m, cap);
    std::sort(ideal.gens.begin(), ideal.gens.end());
    ideal.check_homogeneous();
    return ideal;
}

namespace {

// Elements of an ideal generated by +-1 binomials and monomials; the class is
// closed under S-pairs and division (a binomial reduced by a monomial leaves
// a monomial). lead is the leading term once oriented; tail absent for
// monomial elements.
struct Elem {
    Monomial lead;
    std::optional<Monomial> tail;
};

Elem orient_elem(const Elem& e, const MonomialOrder& order) {
    if (!e.tail || compare(order, e.lead, *e.tail) >= 0) return e;
    return Elem{*e.tail, e.lead};
}

std::optional<Elem> spoly_elem(const Elem& f, const Elem& g, const MonomialOrder& order) {
    Monomial l = mono_lcm(f.lead, g.lead);
    if (!f.tail && !g.tail) return std::nullopt;
    if (!f.tail) {
        if (!g.tail) return std::nullopt;
        return Elem{mono_mul(mono_div(l, g.lead), *g.tail), std::nullopt};
    }
    if (!g.tail) return Elem{mono_mul(mono_div(l, f.lead), *f.tail), std::nullopt};
    Monomial p = mono_mul(mono_div(l, g.lead), *g.tail);
    Monomial m = mono_mul(mono_div(l, f.lead), *f.tail);
    if (p == m) return std::nullopt;
    return orient_elem(Elem{p, m}, order);
}

std::optional<Elem> normal_form_elem(Elem h, const std::vector<Elem>& basis,
                                     const MonomialOrder& order, std::size_t cap) {
    std::size_t steps = 0;
    for (;;) {
        if (++steps > cap) throw Error("iteration-cap-exceeded", "division step cap");
        bool reduced = false;
        for (const auto& g : basis) {
            if (!divides(g.lead, h.lead)) continue;
            Monomial m = mono_div(h.lead, g.lead);
            if (!g.tail) {
                // Monomial divisor kills the lead; the tail remains.
                if (!h.tail) return std::nullopt;
                h = Elem{*h.tail, std::nullopt};
            } else if (!h.tail) {
                h = Elem{mono_mul(m, *g.tail), std::nullopt};
            } else {
                Monomial np = mono_mul(m, *g.tail);
                if (np == *h.tail) return std::nullopt;
                h = orient_elem(Elem{np, *h.tail}, order);
            }
            reduced = true;
            break;
        }
        if (reduced) continue;
        if (h.tail) {
            for (const auto& g : basis) {
                if (!divides(g.lead, *h.tail)) continue;
                Monomial m = mono_div(*h.tail, g.lead);
                if (!g.tail) {
                    h = Elem{h.lead, std::nullopt};
                } else {
                    Monomial nm = mono_mul(m, *g.tail);
                    if (nm == h.lead) return std::nullopt;
                    h = orient_elem(Elem{h.lead, nm}, order);
                }
                reduced = true;
                break;
            }
        }
        if (!reduced) return h;
    }
}

std::vector<Elem> buchberger_elem(std::vector<Elem> gens, const MonomialOrder& order,
                                  std::size_t cap) {
    std::vector<Elem> basis;
    for (const auto& e : gens) {
        if (e.tail && e.lead == *e.tail) continue;
        basis.push_back(orient_elem(e, order));
    }
    std::size_t steps = 0;
    for (;;) {
        bool grew = false;
        std::size_t sz = basis.size();
        for (std::size_t a = 0; a < sz; ++a) {
            for (std::size_t b = a + 1; b < sz; ++b) {
                if (++steps > cap) throw Error("iteration-cap-exceeded", "completion cap");
                if (coprime(basis[a].lead, basis[b].lead) && basis[a].tail && basis[b].tail)
                    continue;
                auto s = spoly_elem(basis[a], basis[b], order);
                if (!s) continue;
                auto r = normal_form_elem(*s, basis, order, cap);
                if (r) {
                    basis.push_back(orient_elem(*r, order));
                    grew = true;
                }
            }
        }
        if (!grew) break;
    }
    return basis;
}

// Standard monomials of a monomial ideal: finite iff every variable has a
// pure power among the generators.
std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Monomial>& gens,
                                                        std::size_t nvars) {
    std::vector<int> bound(nvars, -1);
    for (const auto& g : gens) {
        int var = -1;
        bool pure = true;
        for (std::size_t i = 0; i < nvars; ++i) {
            if (g[i] == 0) continue;
            if (var != -1) {
                pure = false;
                break;
            }
            var = static_cast<int>(i);
        }
        if (pure && var != -1)
            if (bound[var] < 0 || g[var] < bound[var]) bound[var] = g[var];
    }
    for (std::size_t i = 0; i < nvars; ++i)
        if (bound[i] < 0) return std::nullopt;

    std::vector<Monomial> result;
    Monomial current(nvars, 0);
    auto rec = [&](auto&& self, std::size_t var) -> void {
        if (var == nvars) {
            for (const auto& g : gens)
                if (divides(g, current)) return;
            result.push_back(current);
            return;
        }
        for (int e = 0; e < bound[var]; ++e) {
            current[var] = e;
            self(self, var + 1);
        }
        current[var] = 0;
    };
    rec(rec, 0);
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace

GastingerReport gastinger_check(const BinomialIdeal& j, const AffineSemigroup& gamma,
                                std::size_t cap) {
    GastingerReport report;
    // Containment J subset I_Gamma: each generator must vanish under phi,
    // i.e. both monomials have equal Gamma-degree.
    VarContext graded = j.context;
    graded.degree_map = gamma.gens();
    for (const auto& b : j.gens) {
        if (graded.gamma_degree(b.plus) != graded.gamma_degree(b.minus)) {
            report.contained = false;
            throw Error("not-contained", "generator outside the toric ideal");
        }
    }

    std::size_t nvars = j.context.size();
    // Substitute the extremal-ray variables to zero: each binomial becomes a
    // binomial, a monomial, or vanishes, and the class stays closed under the
    // completion below.
    auto touches_extremal = [&](const Monomial& m) {
        for (std::size_t e : gamma.extremal_rays())
            if (m[e] > 0) return true;
        return false;
    };
    std::vector<Elem> gens;
    for (const auto& b : j.gens) {
        bool kp = !touches_extremal(b.plus), km = !touches_extremal(b.minus);
        if (kp && km) {
            gens.push_back(Elem{b.plus, b.minus});
        } else if (kp) {
            gens.push_back(Elem{b.plus, std::nullopt});
        } else if (km) {
            gens.push_back(Elem{b.minus, std::nullopt});
        }
    }
    auto order = MonomialOrder::identity_permutation(OrderKind::DegRevLex, nvars);
    auto gb = buchberger_elem(std::move(gens), order, cap);
    std::vector<Monomial> quotient_gens;
    for (std::size_t e : gamma.extremal_rays()) {
        Monomial v(nvars, 0);
        v[e] = 1;
        quotient_gens.push_back(v);
    }
    for (const auto& g : gb) quotient_gens.push_back(g.lead);
    quotient_gens = minimalize_monomials(quotient_gens);

    auto basis = standard_monomials(quotient_gens, nvars);
    report.apery_size = gamma.apery_set().elements.size();
    if (!basis) {
        report.finite = false;
        report.equal = false;
        return report;
    }
    report.finite = true;
    report.standard_monomials = *basis;
    report.quotient_dim = basis->size();
    report.equal = report.quotient_dim == report.apery_size;
    return report;
}

std::optional<std::vector<Binomial>> coprime_regular_sequence_witness(
    const BinomialIdeal& i, std::size_t target_length, const MonomialOrder& order) {
    if (target_length == 0) return std::vector<Binomial>{};
    if (target_length > i.gens.size()) return std::nullopt;
    std::vector<Monomial> lms;
    for (const auto& b : i.gens) lms.push_back(orient(b, order).plus);

    std::vector<std::size_t> chosen;
    auto rec = [&](auto&& self, std::size_t start) -> bool {
        if (chosen.size() == target_length) return true;
        for (std::size_t k = start; k < lms.size(); ++k) {
            bool ok = true;
            for (std::size_t c : chosen)
                if (!coprime(lms[c], lms[k])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(k);
            if (self(self, k + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    std::vector<Binomial> witness;
    for (std::size_t k : chosen) witness.push_back(i.gens[k]);
    return witness;
}

bool transversal_by_support(const BinomialIdeal& i1, const BinomialIdeal& i2,
                            const MonomialOrder& order, std::size_t cap) {
    if (i1.context.size() != i2.context.size())
        throw Error("dimension-mismatch", "ideals in different contexts");
    auto support = [&](const BinomialIdeal& ideal) {
        std::set<std::size_t> vars;
        for (const auto& m : initial_ideal(ideal.gens, order, cap))
            for (std::size_t v = 0; v < m.size(); ++v)
                if (m[v] > 0) vars.insert(v);
        return vars;
    };
    auto s1 = support(i1);
    auto s2 = support(i2);
    for (std::size_t v : s1)
        if (s2.count(v)) return false;
    return true;
}

std::optional<MonomialOrder> has_quadratic_groebner(const BinomialIdeal& i,
                                                    const std::vector<MonomialOrder>& orders,
                                                    std::size_t cap) {
    for (const auto& order : orders) {
        auto in = initial_ideal(i.gens, order, cap);
        bool quadratic = !in.empty();
        for (const auto& m : in)
            if (total_degree(m) != 2) {
                quadratic = false;
                break;
            }
        if (i.gens.empty()) quadratic = false;
        if (quadratic) return order;
    }
    return std::nullopt;
}

MonomialOrder gap_local_order(std::size_t nvars) {
    // x2 > x3 > ... > xn > x1 > x_{n+1} (0-based: 1,2,...,n-1,0,n).
    std::vector<std::size_t> perm;
    for (std::size_t v = 1; v + 1 < nvars; ++v) perm.push_back(v);
    perm.push_back(0);
    perm.push_back(nvars - 1);
    return MonomialOrder::with_permutation(OrderKind::NegDegRevLex, std::move(perm));
}

MonomialOrder join_local_order(unsigned long n1, unsigned long n2) {
    // Block-1 middles, block-2 middles, then x1, x_{n1+1}, y1, y_{n2+1}.
    std::size_t nvars = n1 + n2 + 2;
    std::vector<std::size_t> perm;
    for (std::size_t v = 1; v < n1; ++v) perm.push_back(v);
    for (std::size_t v = n1 + 2; v < n1 + 1 + n2; ++v) perm.push_back(v);
    perm.push_back(0);
    perm.push_back(n1);
    perm.push_back(n1 + 1);
    perm.push_back(nvars - 1);
    return MonomialOrder::with_permutation(OrderKind::NegDegRevLex, std::move(perm));
}

std::vector<Binomial> gap_stated_basis(std::size_t nvars, unsigned long h,
                                       bool extend_ranges) {
    // f_{i,j} = x_{i+1} x_j - x_i x_{j+1}, f_l = x_2 x_l - x_1^h x_{l+1},
    // stated for 2 <= i <= n-2, i+1 <= j <= n-1, 2 <= l <= n-1 (1-based);
    // the widened hypothesis lets j and l run to n.
    std::size_t n = nvars - 1;
    auto var = [&](std::size_t one_based, int e) {
        Monomial m(nvars, 0);
        m[one_based - 1] += e;
        return m;
    };
    std::vector<Binomial> basis;
    std::size_t jmax = extend_ranges ? n : n - 1;
    for (std::size_t i = 2; i + 2 <= n; ++i) {
        for (std::size_t j = i + 1; j <= jmax; ++j) {
            Monomial plus = mono_mul(var(i + 1, 1), var(j, 1));
            Monomial minus = mono_mul(var(i, 1), var(j + 1, 1));
            if (plus != minus) basis.push_back(canonical(Binomial{plus, minus}));
        }
    }
    std::size_t lmax = extend_ranges ? n : n - 1;
    for (std::size_t l = 2; l <= lmax; ++l) {
        Monomial plus = mono_mul(var(2, 1), var(l, 1));
        Monomial minus = mono_mul(var(1, static_cast<int>(h)), var(l + 1, 1));
        if (plus != minus) basis.push_back(canonical(Binomial{plus, minus}));
    }
    std::sort(basis.begin(), basis.end());
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    return basis;
}

}  // namespace forge
