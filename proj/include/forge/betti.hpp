#pragma once

#include <map>
#include <optional>
#include <vector>

#include "forge/toric.hpp"

namespace forge {

// Multigraded Betti numbers beta_{i, deg}. The degree label is a Z^r vector:
// the exponent vector for monomial quotients, the Gamma-degree for semigroup
// rings. beta_0 = 1 at degree 0 for the cyclic module convention.
struct BettiTable {
    std::map<std::pair<std::size_t, IntVec>, std::size_t> entries;

    void add(std::size_t i, const IntVec& deg, std::size_t value) {
        if (value != 0) entries[{i, deg}] += value;
    }

    // beta_i summed over degrees, index 0..projdim.
    std::vector<std::size_t> totals() const;
    std::size_t projective_dimension() const;
    // max over entries of (sum of degree label) - i. Meaningful when the
    // labels are standard multidegrees.
    long regularity() const;
};

// Betti numbers of A/M for a monomial ideal M, by lcm-strands of the Taylor
// complex. Throws `too-many-generators` above 22 generators.
BettiTable betti_monomial(const std::vector<Monomial>& gens, std::size_t nvars);

// Betti numbers of K[Gamma] via simplicial divisor complexes, with candidate
// degrees read off the Taylor lcm-lattice of a degrevlex initial ideal.
BettiTable betti_semigroup(const AffineSemigroup& gamma,
                           std::size_t cap = kDefaultCompletionCap);

// Krull dimension of A/M for a monomial ideal: largest coordinate subspace
// avoiding all generator supports.
std::size_t monomial_quotient_dimension(const std::vector<Monomial>& gens,
                                        std::size_t nvars);

// pd(K[Gamma]) == #gens - dim Gamma (Auslander-Buchsbaum).
bool is_cohen_macaulay(const AffineSemigroup& gamma,
                       std::size_t cap = kDefaultCompletionCap);

// Last total Betti number. Throws `not-cm`.
std::size_t cm_type(const AffineSemigroup& gamma, std::size_t cap = kDefaultCompletionCap);

struct BettiTransferReport {
    bool ring_cm = false;
    bool initial_cm = false;
    bool support_condition = false;
    std::optional<std::size_t> witness_variable;  // extremal variable index
    std::vector<std::size_t> betti_ring;
    std::vector<std::size_t> betti_initial;
    bool totals_equal = false;
};

// Hypotheses and conclusion of the Betti-transfer statement: both quotients
// Cohen-Macaulay and some extremal variable dividing no leading monomial but
// appearing in every basis element forces equal total Betti numbers.
// With `per_element_witness`, the support condition instead asks each basis
// element separately for its own extremal variable (no single global witness;
// witness_variable stays empty in that mode).
BettiTransferReport betti_transfer_check(const AffineSemigroup& gamma,
                                         const MonomialOrder& order,
                                         std::size_t cap = kDefaultCompletionCap,
                                         bool per_element_witness = false);

// max over the Apery set of the largest factorization length.
Int reg_closed_form(const AffineSemigroup& gamma, const std::vector<std::size_t>& extremal,
                    std::size_t cap = 1000000);

}  // namespace forge
