#pragma once

#include <vector>

#include "forge/poly.hpp"
#include "forge/toric.hpp"

namespace forge {

// Complex of free modules F_0 <- F_1 <- ... <- F_p with polynomial
// differential entries. differentials[k] is the matrix of F_{k+1} -> F_k,
// ranks[k] x ranks[k+1].
struct GradedFreeComplex {
    VarContext context;
    std::vector<std::size_t> ranks;
    std::vector<std::vector<std::vector<Poly>>> differentials;
    // Gamma-degree label per summand, one vector per homological index;
    // empty until assign_degrees succeeds.
    std::vector<std::vector<IntVec>> degrees;

    std::size_t length() const { return ranks.empty() ? 0 : ranks.size() - 1; }
};

// d o d = 0 checked by exact polynomial multiplication.
bool compose_zero(const GradedFreeComplex& c);

// Minimality: every differential entry has zero constant term.
bool is_minimal(const GradedFreeComplex& c);

// Propagate Gamma-degree labels from F_0 (degree 0) through the
// differentials and verify every entry is homogeneous against them.
// Returns false (leaving degrees empty) when the labels are inconsistent.
bool assign_degrees(GradedFreeComplex& c);

// Eagon-Northcott complex of a 2-row matrix of monomials.
// Ranks are 1, i*C(n, i+1) for i = 1..n-1. Throws `bad-shape`.
GradedFreeComplex eagon_northcott(const StructuredMatrix& p);

// Total complex of the double complex, Koszul sign on the left factor.
// Throws `shared-variables` when the factors' entries overlap in variables.
GradedFreeComplex tensor_complexes(const GradedFreeComplex& c1, const GradedFreeComplex& c2);

// Grade certificate for the 2xN minor ideal: a coprime-leading-monomial
// regular sequence of length width-1 exists among the minors, matching the
// generic height bound, so the Eagon-Northcott complex resolves.
bool grade_certified(const StructuredMatrix& p, const BinomialIdeal& minors);

}  // namespace forge
