#pragma once

#include <cstddef>

#include "forge/semigroup.hpp"

namespace forge {

// Generalized-arithmetic-progression family: generators a, ha+d, ..., ha+nd.
struct GapSpec {
    IntVec a;
    IntVec d;
    unsigned long h = 1;  // >= 1
    unsigned long n = 2;  // >= 2

    std::size_t ambient() const { return a.size(); }
    // Generator i (0-based): a for i = 0, h*a + i*d otherwise.
    IntVec generator(unsigned long i) const;
    std::vector<IntVec> generators() const;
};

// Validates independence of a and d and minimal generation.
// Throws `dependent-a-d` or `not-minimal`.
AffineSemigroup gap_semigroup(const GapSpec& spec);

// {0, ha+d, ..., ha+(n-1)d}, flagged closed-form.
AperySet gap_apery_closed_form(const GapSpec& spec, const AffineSemigroup& parent);

// {-(a+d), ..., -(a+(n-1)d)}: the degree-maximal Apery elements minus the sum
// of the extremal rays. (The h factor cancels against the extremal-ray sum,
// so the set is independent of h.)
QFReport gap_qf_closed_form(const GapSpec& spec);

// Block-embed gens of `left` into the first coordinates and `right` after them.
std::vector<IntVec> block_embed(const std::vector<IntVec>& left,
                                const std::vector<IntVec>& right);

// Semigroup on the concatenated, block-embedded generator lists.
// Throws `dependent-extremal-rays` or `not-minimal`.
AffineSemigroup join(const AffineSemigroup& left, const AffineSemigroup& right);

// Closed-form Apery set for the join of two gap semigroups with equal h:
// all lambda(h a1 + i d1) + mu(h a2 + j d2), lambda, mu in {0,1}. Size n1*n2.
AperySet join_apery_closed_form(const GapSpec& s1, const GapSpec& s2,
                                const AffineSemigroup& parent);

// Projective closure of the Backelin curve: s = r(3n+2)+3, generators
// (0,s+3n+2),(s,3n+2),(s+3,3n-1),(s+3n+1,1),(s+3n+2,0) in N^2.
// Requires n >= 2 and r >= 3n+2; throws `parameter-out-of-range`.
AffineSemigroup backelin_projective(unsigned long n, unsigned long r);

}  // namespace forge
