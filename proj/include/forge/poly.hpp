#pragma once

#include <map>

#include "forge/monomial.hpp"

namespace forge {

// Sparse multivariate polynomial with integer coefficients. Used for
// division-trace certificates and free-complex differential entries;
// the heavy basis computations stay on the two-term binomial type.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly monomial(const Monomial& m, const Int& coeff = 1) {
        Poly p(m.size());
        if (coeff != 0) p.terms_[m] = coeff;
        return p;
    }
    static Poly constant(std::size_t nvars, const Int& c) {
        return monomial(Monomial(nvars, 0), c);
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& other) {
        for (const auto& [m, c] : other.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& other) {
        for (const auto& [m, c] : other.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly p(a.nvars_ ? a.nvars_ : b.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) p.add_term(mono_mul(ma, mb), ca * cb);
        return p;
    }

    bool operator==(const Poly& other) const { return terms_ == other.terms_; }

    // Coefficient of the constant monomial.
    Int constant_term() const {
        if (terms_.empty()) return 0;
        auto it = terms_.find(Monomial(nvars_, 0));
        return it == terms_.end() ? Int(0) : it->second;
    }

private:
    std::size_t nvars_ = 0;
    std::map<Monomial, Int> terms_;
};

}  // namespace forge
