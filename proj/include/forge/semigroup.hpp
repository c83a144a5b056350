#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "forge/intvec.hpp"

namespace forge {

struct AperySet;
struct QFReport;

// Finitely generated subsemigroup of N^r with a validated minimal generating set.
// Immutable after construction apart from the thread-safe membership memo.
class AffineSemigroup {
public:
    // Validates: nonzero generators in N^r of equal length, pairwise distinct,
    // none an N-combination of the others. Computes extremal rays.
    explicit AffineSemigroup(std::vector<IntVec> gens);

    // Copy/move transfer the memo under its lock; the mutex itself is fresh.
    AffineSemigroup(const AffineSemigroup& other)
        : ambient_dim_(other.ambient_dim_),
          gens_(other.gens_),
          extremal_idx_(other.extremal_idx_),
          dim_(other.dim_),
          search_order_(other.search_order_) {
        std::lock_guard<std::mutex> lock(other.memo_mutex_);
        member_memo_ = other.member_memo_;
    }
    AffineSemigroup(AffineSemigroup&& other) noexcept
        : ambient_dim_(other.ambient_dim_),
          gens_(std::move(other.gens_)),
          extremal_idx_(std::move(other.extremal_idx_)),
          dim_(other.dim_),
          search_order_(std::move(other.search_order_)) {
        std::lock_guard<std::mutex> lock(other.memo_mutex_);
        member_memo_ = std::move(other.member_memo_);
    }
    AffineSemigroup& operator=(const AffineSemigroup&) = delete;
    AffineSemigroup& operator=(AffineSemigroup&&) = delete;

    std::size_t ambient_dim() const { return ambient_dim_; }
    const std::vector<IntVec>& gens() const { return gens_; }
    const std::set<std::size_t>& extremal_rays() const { return extremal_idx_; }

    // Rank over Q of the generator matrix.
    std::size_t dim() const { return dim_; }

    bool is_simplicial() const;

    // v in Gamma? Negative entries yield false immediately.
    bool contains(const IntVec& v) const;
    // Witness lambda with sum lambda_i a_i = v, if v is a member.
    std::optional<std::vector<Int>> factorization_witness(const IntVec& v) const;
    // All lambda in N^gens with sum lambda_i a_i = v. Throws `not-a-member`.
    std::vector<std::vector<Int>> factorizations(const IntVec& v) const;

    // BFS over sums of non-extremal generators, pruning outside the Apery set.
    // Throws `apery-bound-exceeded` when more than `cap` nodes are visited.
    AperySet apery_set(const std::set<std::size_t>& e, std::size_t cap = 1000000) const;
    AperySet apery_set() const;

    QFReport quasi_frobenius(std::size_t cap = 1000000) const;

    // The cited sufficient criterion -QF(Gamma) subset of Ap(Gamma,E).
    bool is_normal_by_qf_criterion(std::size_t cap = 1000000) const;

    // Max total coefficient over all factorizations of w. Throws `not-a-member`.
    Int ord(const IntVec& w) const;

    // Every Apery element has all factorizations of equal total coefficient sum.
    bool is_homogeneous(std::size_t cap = 1000000) const;

private:
    std::size_t ambient_dim_;
    std::vector<IntVec> gens_;
    std::set<std::size_t> extremal_idx_;
    std::size_t dim_;
    std::vector<std::size_t> search_order_;  // generators by decreasing coordinate sum

    mutable std::map<IntVec, bool> member_memo_;
    mutable std::mutex memo_mutex_;

    bool contains_impl(const IntVec& v, std::vector<Int>* witness) const;
};

struct AperySet {
    const AffineSemigroup* parent;
    std::vector<IntVec> elements;  // sorted lexicographically
    std::set<std::size_t> with_respect_to;
    bool closed_form = false;  // true when produced by a family evaluator
};

struct QFReport {
    std::vector<IntVec> qf_elements;  // sorted lexicographically, may have negative entries
    std::size_t type_count = 0;
};

inline AperySet AffineSemigroup::apery_set() const { return apery_set(extremal_idx_); }

// Helpers shared with the constructors module.
bool member_of_gens(const std::vector<IntVec>& gens, const IntVec& v);
void sort_vectors(std::vector<IntVec>& vs);

}  // namespace forge
