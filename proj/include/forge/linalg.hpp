#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "forge/intvec.hpp"

namespace forge {

// Dense matrix over Q, row-major. No floating point anywhere in this module.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    RatMat transpose() const;
    RatMat mul(const RatMat& other) const;
    bool is_zero() const;

    static RatMat identity(std::size_t n);
    static RatMat from_rows(const std::vector<std::vector<long>>& rows);
    static RatMat from_int_columns(const std::vector<IntVec>& cols);

private:
    std::size_t rows_, cols_;
    std::vector<Rat> entries_;
};

// Rank over Q by fraction-free (Bareiss) elimination on a denominator-cleared copy.
std::size_t rank_rational(const RatMat& m);

// Some x >= 0 with A x = b, or nullopt if the system is infeasible over Q>=0.
// Exact phase-1 simplex with Bland's rule.
std::optional<std::vector<Rat>> solve_nonneg(const RatMat& a, const std::vector<Rat>& b);

// Reduced homology ranks of a chain complex given by boundary matrices.
// boundaries[k] maps C_k -> C_{k-1}; the augmentation map C_0 -> C_{-1} = Q
// must be included as boundaries[0]. Returns dim H~_k for k = 0..p.
// Throws `not-a-complex` if consecutive boundaries do not compose to zero.
std::vector<std::size_t> reduced_homology_ranks(const std::vector<RatMat>& boundaries);

}  // namespace forge
