#pragma once

#include <optional>
#include <set>
#include <vector>

#include "forge/binomial.hpp"
#include "forge/groebner.hpp"
#include "forge/semigroup.hpp"

namespace forge {

// Two rows of monomials, e.g. [[x1^h, x2, ..., xn], [x2, x3, ..., x_{n+1}]].
struct StructuredMatrix {
    VarContext context;
    std::vector<Monomial> top;
    std::vector<Monomial> bottom;

    std::size_t width() const { return top.size(); }
};

// Variable context z_1..z_{r+n} with Gamma-degrees a_i, names x1..x{m} by default.
VarContext semigroup_context(const AffineSemigroup& gamma, const std::string& prefix = "x");

// The structured 2-row matrix attached to a gap semigroup on `context`
// (width n, entries in variables x1..x_{n+1}).
StructuredMatrix gap_matrix(const VarContext& context, unsigned long h);

// Block pair for a join of two gap semigroups: gap matrix of block 1 in the
// first n1+1 variables, gap matrix of block 2 in the remaining n2+1.
std::pair<StructuredMatrix, StructuredMatrix> join_matrices(const VarContext& context,
                                                            unsigned long n1, unsigned long n2,
                                                            unsigned long h);

// All 2x2 minors as binomials.
BinomialIdeal minors_2x2(const StructuredMatrix& p);

// Union of the two minor sets in the shared context.
BinomialIdeal minors_2x2_pair(const StructuredMatrix& p1, const StructuredMatrix& p2);

// Ker(phi) by block elimination: t-block > z-block, degrevlex inside blocks;
// restricted to z-only binomials and pruned to a minimal generating set.
BinomialIdeal toric_ideal(const AffineSemigroup& gamma, const std::string& prefix = "x",
                          std::size_t cap = kDefaultCompletionCap);

struct GastingerReport {
    bool contained = true;           // J subset of I_Gamma (degree check)
    bool finite = false;
    std::size_t quotient_dim = 0;    // dim_K A / (J + extremal variables)
    std::size_t apery_size = 0;
    bool equal = false;
    std::vector<Monomial> standard_monomials;
};

// Generation test: dim_K A/(J + <z_e : e extremal>) == |Ap(Gamma, E)|.
// Throws `not-contained` when J is not Gamma-homogeneous w.r.t. Gamma's degrees,
// `infinite-dimensional` never (reported in the struct instead).
GastingerReport gastinger_check(const BinomialIdeal& j, const AffineSemigroup& gamma,
                                std::size_t cap = kDefaultCompletionCap);

// Subset of the generators with pairwise-coprime leading monomials under
// `order`, of the requested size; nullopt when no such subset exists.
std::optional<std::vector<Binomial>> coprime_regular_sequence_witness(
    const BinomialIdeal& i, std::size_t target_length, const MonomialOrder& order);

// supp(in(I1)) and supp(in(I2)) disjoint: certifies transversal intersection.
// A false result is inconclusive.
bool transversal_by_support(const BinomialIdeal& i1, const BinomialIdeal& i2,
                            const MonomialOrder& order,
                            std::size_t cap = kDefaultCompletionCap);

// First candidate order whose initial ideal is generated in degree 2.
std::optional<MonomialOrder> has_quadratic_groebner(const BinomialIdeal& i,
                                                    const std::vector<MonomialOrder>& orders,
                                                    std::size_t cap = kDefaultCompletionCap);

// Negative degrevlex induced by x2 > x3 > ... > xn > x1 > x_{n+1}
// on n+1 variables.
MonomialOrder gap_local_order(std::size_t nvars);

// Negative degrevlex induced by block-1 middles, block-2 middles, then the
// four extremal-ray variables, for a join context with n1+1 and n2+1 variables.
MonomialOrder join_local_order(unsigned long n1, unsigned long n2);

// The literal generating set stated for the gap family: f_{i,j} and f_l over
// the stated index ranges; `extend_ranges` widens j and l to n.
std::vector<Binomial> gap_stated_basis(std::size_t nvars, unsigned long h,
                                       bool extend_ranges);

}  // namespace forge
