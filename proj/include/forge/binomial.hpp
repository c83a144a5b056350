#pragma once

#include <optional>
#include <vector>

#include "forge/monomial.hpp"
#include "forge/order.hpp"
#include "forge/poly.hpp"

namespace forge {

// plus - minus with coefficients fixed at +1/-1. plus != minus always.
struct Binomial {
    Monomial plus;
    Monomial minus;

    bool operator==(const Binomial& other) const = default;
    bool operator<(const Binomial& other) const {
        return plus != other.plus ? plus < other.plus : minus < other.minus;
    }

    Poly to_poly() const {
        Poly p = Poly::monomial(plus, 1);
        p.add_term(minus, -1);
        return p;
    }
};

// Orientation with plus as the leading monomial under `order`.
inline Binomial orient(const Binomial& b, const MonomialOrder& order) {
    if (compare(order, b.plus, b.minus) >= 0) return b;
    return Binomial{b.minus, b.plus};
}

// Sign-insensitive normal form used for set comparisons: plus is the
// lexicographically larger monomial.
inline Binomial canonical(const Binomial& b) {
    if (b.plus >= b.minus) return b;
    return Binomial{b.minus, b.plus};
}

struct BinomialIdeal {
    VarContext context;
    std::vector<Binomial> gens;

    // Every generator must be Gamma-homogeneous when a degree map is present.
    void check_homogeneous() const;
};

}  // namespace forge
