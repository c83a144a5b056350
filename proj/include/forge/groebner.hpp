#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "forge/binomial.hpp"
#include "forge/order.hpp"

namespace forge {

inline constexpr std::size_t kDefaultReductionCap = 100000;
inline constexpr std::size_t kDefaultCompletionCap = 2000000;

// Certificate for one division: unit * f = sum coeffs[i] * basis[i] + remainder.
// For global orders the unit is 1; Mora reductions against intermediate
// elements fold into a unit of the form 1 - (higher order terms).
struct DivisionTrace {
    Poly unit;
    std::vector<Poly> coeffs;
};

// S-polynomial of two +-1 binomials is again a binomial (or zero -> nullopt).
std::optional<Binomial> spoly(const Binomial& f, const Binomial& g,
                              const MonomialOrder& order);

// Remainder of f on division by G. Global orders: both terms fully reduced.
// Local orders: Mora weak normal form with ecart-minimal divisor selection.
// nullopt = zero remainder. Throws `iteration-cap-exceeded`.
std::optional<Binomial> normal_form(const Binomial& f, const std::vector<Binomial>& g,
                                    const MonomialOrder& order,
                                    std::size_t cap = kDefaultReductionCap,
                                    DivisionTrace* trace = nullptr);

// Reduced Groebner basis (global order) or minimal standard basis with
// tail reduction (local order). Deterministic output ordering.
std::vector<Binomial> buchberger(std::vector<Binomial> gens, const MonomialOrder& order,
                                 std::size_t cap = kDefaultCompletionCap);

struct GroebnerCertificate {
    bool ok = true;
    std::size_t failing_i = 0, failing_j = 0;
    std::optional<Binomial> failing_remainder;
    std::size_t pairs_checked = 0;
};

// Every S-pair reduces to zero against G.
bool is_groebner(const std::vector<Binomial>& g, const MonomialOrder& order,
                 std::size_t cap = kDefaultCompletionCap,
                 GroebnerCertificate* cert = nullptr);

// Minimal monomial generating set: drop monomials divisible by another.
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> monomials);

// Minimal generating set of <LM(g) : g in basis(I)> under `order`.
std::vector<Monomial> initial_ideal(const std::vector<Binomial>& gens,
                                    const MonomialOrder& order,
                                    std::size_t cap = kDefaultCompletionCap);

// f in <gens>? Decided by division against a degrevlex Groebner basis.
bool ideal_member(const Binomial& f, const std::vector<Binomial>& gens,
                  std::size_t nvars, std::size_t cap = kDefaultCompletionCap);

// Reduced degrevlex bases coincide (sign-insensitive).
bool ideal_equal(const BinomialIdeal& i, const BinomialIdeal& j,
                 std::size_t cap = kDefaultCompletionCap);

// Drop generators lying in the ideal of the remaining ones (graded Nakayama).
std::vector<Binomial> minimal_generators(std::vector<Binomial> gens, std::size_t nvars,
                                         std::size_t cap = kDefaultCompletionCap);

}  // namespace forge
