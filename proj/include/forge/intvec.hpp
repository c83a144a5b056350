#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "forge/error.hpp"

namespace forge {

using Int = mpz_class;
using Rat = mpq_class;

// Lattice point in Z^r. Arithmetic requires equal lengths.
using IntVec = std::vector<Int>;

inline IntVec operator+(const IntVec& u, const IntVec& v) {
    if (u.size() != v.size()) throw Error("dimension-mismatch", "vector lengths differ");
    IntVec w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
    return w;
}

inline IntVec operator-(const IntVec& u, const IntVec& v) {
    if (u.size() != v.size()) throw Error("dimension-mismatch", "vector lengths differ");
    IntVec w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] - v[i];
    return w;
}

inline IntVec operator*(const Int& c, const IntVec& v) {
    IntVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = c * v[i];
    return w;
}

inline IntVec negate(const IntVec& v) {
    IntVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = -v[i];
    return w;
}

inline bool is_zero(const IntVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline bool all_nonneg(const IntVec& v) {
    for (const auto& x : v)
        if (x < 0) return false;
    return true;
}

inline Int coord_sum(const IntVec& v) {
    Int s = 0;
    for (const auto& x : v) s += x;
    return s;
}

inline IntVec make_vec(std::initializer_list<long> xs) {
    IntVec v;
    v.reserve(xs.size());
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline std::string to_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

}  // namespace forge
