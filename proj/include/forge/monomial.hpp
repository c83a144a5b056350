#pragma once

#include <string>
#include <vector>

#include "forge/intvec.hpp"

namespace forge {

// Exponent vector over a fixed variable context.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

inline bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

// Quotient a/b; caller guarantees divisibility.
inline Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] > b[i] ? a[i] : b[i];
    return c;
}

inline Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    Monomial c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] < b[i] ? a[i] : b[i];
    return c;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

inline bool is_one(const Monomial& m) {
    for (int e : m)
        if (e != 0) return false;
    return true;
}

// Variable names plus the Gamma-degree of each variable (empty when ungraded).
struct VarContext {
    std::vector<std::string> names;
    std::vector<IntVec> degree_map;  // degree_map[i] = Gamma-degree of variable i

    std::size_t size() const { return names.size(); }

    // Gamma-degree of a monomial under the degree map.
    IntVec gamma_degree(const Monomial& m) const {
        IntVec deg(degree_map.empty() ? 0 : degree_map[0].size(), Int(0));
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) deg = deg + Int(m[i]) * degree_map[i];
        return deg;
    }

    std::string render(const Monomial& m) const {
        std::string s;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += names[i];
            if (m[i] > 1) s += "^" + std::to_string(m[i]);
        }
        return s.empty() ? "1" : s;
    }
};

}  // namespace forge
