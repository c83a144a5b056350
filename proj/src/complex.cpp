#include "forge/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "forge/error.hpp"

namespace forge {

namespace {

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    // Lexicographic enumeration keeps basis ordering deterministic.
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

Poly zero_poly(std::size_t nvars) { return Poly(nvars); }

Poly minor_poly(const StructuredMatrix& p, std::size_t a, std::size_t b) {
    Poly f(p.context.size());
    f.add_term(mono_mul(p.top[a], p.bottom[b]), 1);
    f.add_term(mono_mul(p.top[b], p.bottom[a]), -1);
    return f;
}

// Variables appearing in any differential entry.
std::set<std::size_t> variable_support(const GradedFreeComplex& c) {
    std::set<std::size_t> vars;
    for (const auto& mat : c.differentials)
        for (const auto& row : mat)
            for (const Poly& f : row)
                for (const auto& [m, coeff] : f.terms())
                    for (std::size_t i = 0; i < m.size(); ++i)
                        if (m[i] > 0) vars.insert(i);
    return vars;
}

}  // namespace

bool compose_zero(const GradedFreeComplex& c) {
    for (std::size_t k = 0; k + 1 < c.differentials.size(); ++k) {
        const auto& d1 = c.differentials[k];      // F_{k+1} -> F_k
        const auto& d2 = c.differentials[k + 1];  // F_{k+2} -> F_{k+1}
        for (std::size_t r = 0; r < c.ranks[k]; ++r) {
            for (std::size_t col = 0; col < c.ranks[k + 2]; ++col) {
                Poly acc(c.context.size());
                for (std::size_t mid = 0; mid < c.ranks[k + 1]; ++mid)
                    acc += d1[r][mid] * d2[mid][col];
                if (!acc.is_zero()) return false;
            }
        }
    }
    return true;
}

bool is_minimal(const GradedFreeComplex& c) {
    for (const auto& mat : c.differentials)
        for (const auto& row : mat)
            for (const Poly& f : row)
                if (f.constant_term() != 0) return false;
    return true;
}

bool assign_degrees(GradedFreeComplex& c) {
    if (c.context.degree_map.empty()) return false;
    const std::size_t r = c.context.degree_map[0].size();
    std::vector<std::vector<IntVec>> degs(c.ranks.size());
    degs[0].assign(c.ranks[0], IntVec(r, Int(0)));
    for (std::size_t k = 0; k < c.differentials.size(); ++k) {
        degs[k + 1].assign(c.ranks[k + 1], IntVec(r, Int(0)));
        std::vector<bool> seen(c.ranks[k + 1], false);
        for (std::size_t col = 0; col < c.ranks[k + 1]; ++col) {
            for (std::size_t row = 0; row < c.ranks[k]; ++row) {
                const Poly& f = c.differentials[k][row][col];
                for (const auto& [m, coeff] : f.terms()) {
                    IntVec d = degs[k][row] + c.context.gamma_degree(m);
                    if (!seen[col]) {
                        degs[k + 1][col] = d;
                        seen[col] = true;
                    } else if (!(degs[k + 1][col] == d)) {
                        return false;
                    }
                }
            }
            // A zero column would leave the summand unlabelled.
            if (!seen[col]) return false;
        }
    }
    c.degrees = std::move(degs);
    return true;
}

GradedFreeComplex eagon_northcott(const StructuredMatrix& p) {
    const std::size_t n = p.width();
    if (n < 2 || p.bottom.size() != n)
        throw Error("bad-shape", "expected a 2-row matrix of width >= 2");
    GradedFreeComplex c;
    c.context = p.context;
    const std::size_t nvars = p.context.size();

    // Basis of F_i, i >= 1: (q, S) with q in 0..i-1 the exponent of the second
    // dual-symmetric variable and S an (i+1)-subset of the columns.
    struct EnBasis {
        std::size_t q;
        std::vector<std::size_t> set;
    };
    std::vector<std::vector<EnBasis>> bases(n);  // index i = 1..n-1
    c.ranks.push_back(1);
    for (std::size_t i = 1; i <= n - 1; ++i) {
        std::vector<EnBasis> level;
        auto sets = subsets_of_size(n, i + 1);
        for (std::size_t q = 0; q < i; ++q)
            for (const auto& s : sets) level.push_back({q, s});
        c.ranks.push_back(level.size());
        bases[i] = std::move(level);
    }

    // d_1: (0, {a,b}) -> the 2x2 minor on columns a, b.
    {
        std::vector<std::vector<Poly>> d(1, std::vector<Poly>(c.ranks[1], zero_poly(nvars)));
        for (std::size_t col = 0; col < bases[1].size(); ++col) {
            const auto& s = bases[1][col].set;
            d[0][col] = minor_poly(p, s[0], s[1]);
        }
        c.differentials.push_back(std::move(d));
    }

    // d_i, i >= 2: contract one exterior slot against one row of the matrix,
    // lowering the matching dual-symmetric exponent.
    for (std::size_t i = 2; i <= n - 1; ++i) {
        std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
        for (std::size_t row = 0; row < bases[i - 1].size(); ++row)
            index[{bases[i - 1][row].q, bases[i - 1][row].set}] = row;
        std::vector<std::vector<Poly>> d(c.ranks[i - 1],
                                         std::vector<Poly>(c.ranks[i], zero_poly(nvars)));
        for (std::size_t col = 0; col < bases[i].size(); ++col) {
            const auto& [q, s] = bases[i][col];
            const std::size_t pexp = (i - 1) - q;  // exponent of the first dual variable
            for (std::size_t row2 = 0; row2 < 2; ++row2) {
                const std::size_t exp = row2 == 0 ? pexp : q;
                if (exp == 0) continue;
                const std::size_t qnew = row2 == 0 ? q : q - 1;
                for (std::size_t t = 0; t < s.size(); ++t) {
                    std::vector<std::size_t> rest = s;
                    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
                    const std::size_t row = index.at({qnew, rest});
                    const Monomial& entry = row2 == 0 ? p.top[s[t]] : p.bottom[s[t]];
                    d[row][col].add_term(entry, (t % 2 == 0) ? Int(1) : Int(-1));
                }
            }
        }
        c.differentials.push_back(std::move(d));
    }
    return c;
}

GradedFreeComplex tensor_complexes(const GradedFreeComplex& c1, const GradedFreeComplex& c2) {
    if (c1.context.size() != c2.context.size())
        throw Error("shared-variables", "factors must live in one ambient context");
    auto v1 = variable_support(c1);
    auto v2 = variable_support(c2);
    for (std::size_t v : v1)
        if (v2.count(v))
            throw Error("shared-variables",
                        "variable " + c1.context.names[v] + " appears in both factors");

    GradedFreeComplex c;
    c.context = c1.context;
    const std::size_t nvars = c.context.size();
    const std::size_t p1 = c1.length(), p2 = c2.length();
    const std::size_t p = p1 + p2;

    // offset[k][i] = start of the F1_i (x) F2_{k-i} block inside F_k.
    std::vector<std::vector<std::size_t>> offset(p + 1);
    c.ranks.assign(p + 1, 0);
    for (std::size_t k = 0; k <= p; ++k) {
        for (std::size_t i = 0; i <= k; ++i) {
            offset[k].push_back(c.ranks[k]);
            const std::size_t j = k - i;
            if (i <= p1 && j <= p2) c.ranks[k] += c1.ranks[i] * c2.ranks[j];
        }
    }

    for (std::size_t k = 1; k <= p; ++k) {
        std::vector<std::vector<Poly>> d(c.ranks[k - 1],
                                         std::vector<Poly>(c.ranks[k], zero_poly(nvars)));
        for (std::size_t i = 0; i <= k; ++i) {
            const std::size_t j = k - i;
            if (i > p1 || j > p2) continue;
            const std::size_t r1 = c1.ranks[i], r2 = c2.ranks[j];
            for (std::size_t a = 0; a < r1; ++a) {
                for (std::size_t b = 0; b < r2; ++b) {
                    const std::size_t col = offset[k][i] + a * r2 + b;
                    if (i >= 1) {
                        // d1(a) (x) b lands in the (i-1, j) block.
                        const std::size_t base = offset[k - 1][i - 1];
                        for (std::size_t a2 = 0; a2 < c1.ranks[i - 1]; ++a2) {
                            const Poly& e = c1.differentials[i - 1][a2][a];
                            if (!e.is_zero()) d[base + a2 * r2 + b][col] += e;
                        }
                    }
                    if (j >= 1) {
                        // (-1)^i a (x) d2(b) lands in the (i, j-1) block.
                        const std::size_t base = offset[k - 1][i];
                        const std::size_t r2low = c2.ranks[j - 1];
                        const Int sign = (i % 2 == 0) ? 1 : -1;
                        for (std::size_t b2 = 0; b2 < r2low; ++b2) {
                            const Poly& e = c2.differentials[j - 1][b2][b];
                            if (e.is_zero()) continue;
                            Poly scaled(nvars);
                            for (const auto& [m, coeff] : e.terms())
                                scaled.add_term(m, sign * coeff);
                            d[base + a * r2low + b2][col] += scaled;
                        }
                    }
                }
            }
        }
        c.differentials.push_back(std::move(d));
    }
    return c;
}

bool grade_certified(const StructuredMatrix& p, const BinomialIdeal& minors) {
    if (p.width() < 2) return false;
    const std::size_t target = p.width() - 1;
    const std::size_t nvars = p.context.size();
    // Candidate orders: the proof order x_{n+1} > x_n > ... > x_3 > x_1 > x_2
    // when the context has the gap shape, then plain degrevlex.
    std::vector<MonomialOrder> orders;
    if (nvars >= 3) {
        MonomialOrder proof{OrderKind::DegRevLex, {}, 0};
        for (std::size_t i = nvars; i-- > 2;) proof.var_permutation.push_back(i);
        proof.var_permutation.push_back(0);
        proof.var_permutation.push_back(1);
        orders.push_back(proof);
    }
    MonomialOrder plain{OrderKind::DegRevLex, {}, 0};
    for (std::size_t i = 0; i < nvars; ++i) plain.var_permutation.push_back(i);
    orders.push_back(plain);
    for (const auto& order : orders)
        if (coprime_regular_sequence_witness(minors, target, order)) return true;
    return false;
}

}  // namespace forge
