#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "forge/monomial.hpp"

namespace forge {

enum class OrderKind { Lex, DegRevLex, NegDegRevLex, BlockElim };

// Monomial order: a kind plus a variable priority sequence
// var_permutation = (i_1, ..., i_m) meaning z_{i_1} > z_{i_2} > ... (0-based).
// BlockElim compares the first `block_boundary` priority positions as an
// eliminated block (degrevlex within), ties broken degrevlex on the rest.
struct MonomialOrder {
    OrderKind kind = OrderKind::DegRevLex;
    std::vector<std::size_t> var_permutation;
    std::size_t block_boundary = 0;

    // Local orders rank 1 above every other monomial.
    bool is_local() const { return kind == OrderKind::NegDegRevLex; }

    static MonomialOrder identity_permutation(OrderKind kind, std::size_t nvars);
    static MonomialOrder with_permutation(OrderKind kind, std::vector<std::size_t> perm);
    static MonomialOrder block_elimination(std::size_t nvars, std::size_t boundary);
};

// -1 if m1 < m2, 0 if equal, +1 if m1 > m2.
int compare(const MonomialOrder& order, const Monomial& m1, const Monomial& m2);

inline bool greater(const MonomialOrder& order, const Monomial& m1, const Monomial& m2) {
    return compare(order, m1, m2) > 0;
}

}  // namespace forge
