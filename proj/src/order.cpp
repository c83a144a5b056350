#include "forge/order.hpp"

#include "forge/error.hpp"

namespace forge {

MonomialOrder MonomialOrder::identity_permutation(OrderKind kind, std::size_t nvars) {
    MonomialOrder o;
    o.kind = kind;
    o.var_permutation.resize(nvars);
    for (std::size_t i = 0; i < nvars; ++i) o.var_permutation[i] = i;
    return o;
}

MonomialOrder MonomialOrder::with_permutation(OrderKind kind, std::vector<std::size_t> perm) {
    MonomialOrder o;
    o.kind = kind;
    o.var_permutation = std::move(perm);
    return o;
}

MonomialOrder MonomialOrder::block_elimination(std::size_t nvars, std::size_t boundary) {
    MonomialOrder o = identity_permutation(OrderKind::BlockElim, nvars);
    o.block_boundary = boundary;
    return o;
}

namespace {

// Degrevlex on the sub-exponent sequence given by priority positions
// perm[lo..hi). Returns -1/0/+1 for m1 vs m2.
int degrevlex_span(const std::vector<std::size_t>& perm, std::size_t lo, std::size_t hi,
                   const Monomial& m1, const Monomial& m2, bool negate_degree) {
    long d1 = 0, d2 = 0;
    for (std::size_t p = lo; p < hi; ++p) {
        d1 += m1[perm[p]];
        d2 += m2[perm[p]];
    }
    if (d1 != d2) {
        int by_degree = d1 > d2 ? 1 : -1;
        return negate_degree ? -by_degree : by_degree;
    }
    // Reverse-lex tie break: the monomial whose exponent is smaller at the
    // last differing priority position is the larger one.
    for (std::size_t p = hi; p-- > lo;) {
        int e1 = m1[perm[p]], e2 = m2[perm[p]];
        if (e1 != e2) return e1 < e2 ? 1 : -1;
    }
    return 0;
}

}  // namespace

int compare(const MonomialOrder& order, const Monomial& m1, const Monomial& m2) {
    const auto& perm = order.var_permutation;
    if (m1.size() != perm.size() || m2.size() != perm.size())
        throw Error("dimension-mismatch", "monomial length does not match order");
    switch (order.kind) {
        case OrderKind::Lex:
            for (std::size_t p = 0; p < perm.size(); ++p) {
                int e1 = m1[perm[p]], e2 = m2[perm[p]];
                if (e1 != e2) return e1 > e2 ? 1 : -1;
            }
            return 0;
        case OrderKind::DegRevLex:
            return degrevlex_span(perm, 0, perm.size(), m1, m2, false);
        case OrderKind::NegDegRevLex:
            return degrevlex_span(perm, 0, perm.size(), m1, m2, true);
        case OrderKind::BlockElim: {
            int head = degrevlex_span(perm, 0, order.block_boundary, m1, m2, false);
            if (head != 0) return head;
            return degrevlex_span(perm, order.block_boundary, perm.size(), m1, m2, false);
        }
    }
    return 0;
}

}  // namespace forge
