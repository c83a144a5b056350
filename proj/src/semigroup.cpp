#include "forge/semigroup.hpp"

#include <algorithm>
#include <deque>

#include "forge/linalg.hpp"

namespace forge {

namespace {

// Bounded depth-first membership search over residuals. Generators must be
// nonzero with nonnegative entries, so every subtraction strictly decreases
// the coordinate sum and the search terminates.
bool dfs_member(const IntVec& v, const std::vector<IntVec>& gens,
                const std::vector<std::size_t>& order, std::map<IntVec, bool>& memo,
                std::vector<Int>* witness) {
    if (is_zero(v)) return true;
    if (!all_nonneg(v)) return false;
    auto it = memo.find(v);
    if (it != memo.end() && !(it->second && witness)) return it->second;
    bool found = false;
    for (std::size_t gi : order) {
        IntVec rest = v;
        bool ok = true;
        for (std::size_t c = 0; c < rest.size(); ++c) {
            rest[c] -= gens[gi][c];
            if (rest[c] < 0) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        if (dfs_member(rest, gens, order, memo, witness)) {
            if (witness) (*witness)[gi] += 1;
            found = true;
            break;
        }
    }
    memo[v] = found;
    return found;
}

std::vector<std::size_t> descending_sum_order(const std::vector<IntVec>& gens) {
    std::vector<std::size_t> order(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return coord_sum(gens[a]) > coord_sum(gens[b]);
    });
    return order;
}

}  // namespace

bool member_of_gens(const std::vector<IntVec>& gens, const IntVec& v) {
    std::map<IntVec, bool> memo;
    auto order = descending_sum_order(gens);
    return dfs_member(v, gens, order, memo, nullptr);
}

void sort_vectors(std::vector<IntVec>& vs) { std::sort(vs.begin(), vs.end()); }

AffineSemigroup::AffineSemigroup(std::vector<IntVec> gens) : gens_(std::move(gens)) {
    if (gens_.empty()) throw Error("zero-generator", "empty generator list");
    ambient_dim_ = gens_[0].size();
    for (const auto& g : gens_) {
        if (g.size() != ambient_dim_)
            throw Error("dimension-mismatch", "generators of unequal length");
        if (is_zero(g)) throw Error("zero-generator", "zero vector among generators");
        if (!all_nonneg(g))
            throw Error("zero-generator", "generator outside N^r: " + to_string(g));
    }
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            if (gens_[i] == gens_[j])
                throw Error("not-minimal", "duplicate generator " + to_string(gens_[i]));

    // Minimality: no generator may be an N-combination of the others.
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        std::vector<IntVec> others;
        for (std::size_t j = 0; j < gens_.size(); ++j)
            if (j != i) others.push_back(gens_[j]);
        if (!others.empty() && member_of_gens(others, gens_[i]))
            throw Error("not-minimal", "redundant generator " + to_string(gens_[i]));
    }

    search_order_ = descending_sum_order(gens_);
    dim_ = rank_rational(RatMat::from_int_columns(gens_));

    // a_i spans an extreme ray iff it is not in the rational cone of the
    // generators off its own ray; the smallest generator on each extreme ray
    // is the extremal-ray element.
    auto proportional = [&](const IntVec& u, const IntVec& v) {
        for (std::size_t p = 0; p < u.size(); ++p)
            for (std::size_t q = p + 1; q < u.size(); ++q)
                if (u[p] * v[q] != u[q] * v[p]) return false;
        return true;
    };
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        std::vector<IntVec> others;
        bool smallest_on_ray = true;
        for (std::size_t j = 0; j < gens_.size(); ++j) {
            if (j == i) continue;
            if (proportional(gens_[i], gens_[j])) {
                if (coord_sum(gens_[j]) < coord_sum(gens_[i])) smallest_on_ray = false;
            } else {
                others.push_back(gens_[j]);
            }
        }
        if (!smallest_on_ray) continue;
        std::vector<Rat> b(ambient_dim_);
        for (std::size_t c = 0; c < ambient_dim_; ++c) b[c] = Rat(gens_[i][c]);
        if (others.empty() || !solve_nonneg(RatMat::from_int_columns(others), b))
            extremal_idx_.insert(i);
    }
}

bool AffineSemigroup::is_simplicial() const {
    std::vector<IntVec> extremal;
    for (std::size_t i : extremal_idx_) extremal.push_back(gens_[i]);
    if (rank_rational(RatMat::from_int_columns(extremal)) != dim_) return false;
    if (extremal.size() != dim_) return false;
    RatMat e = RatMat::from_int_columns(extremal);
    for (const auto& g : gens_) {
        std::vector<Rat> b(ambient_dim_);
        for (std::size_t c = 0; c < ambient_dim_; ++c) b[c] = Rat(g[c]);
        if (!solve_nonneg(e, b)) return false;
    }
    return true;
}

bool AffineSemigroup::contains_impl(const IntVec& v, std::vector<Int>* witness) const {
    if (v.size() != ambient_dim_) throw Error("dimension-mismatch", "membership query");
    std::lock_guard<std::mutex> lock(memo_mutex_);
    return dfs_member(v, gens_, search_order_, member_memo_, witness);
}

bool AffineSemigroup::contains(const IntVec& v) const { return contains_impl(v, nullptr); }

std::optional<std::vector<Int>> AffineSemigroup::factorization_witness(const IntVec& v) const {
    std::vector<Int> w(gens_.size(), Int(0));
    if (!contains_impl(v, &w)) return std::nullopt;
    return w;
}

std::vector<std::vector<Int>> AffineSemigroup::factorizations(const IntVec& v) const {
    if (!contains(v)) throw Error("not-a-member", to_string(v) + " is not in the semigroup");
    std::vector<std::vector<Int>> result;
    std::vector<Int> current(gens_.size(), Int(0));
    // Exhaustive enumeration with coordinatewise bounds on each coefficient.
    auto rec = [&](auto&& self, std::size_t gi, const IntVec& rest) -> void {
        if (gi == gens_.size()) {
            if (is_zero(rest)) result.push_back(current);
            return;
        }
        Int bound = -1;
        for (std::size_t c = 0; c < rest.size(); ++c) {
            if (gens_[gi][c] > 0) {
                Int q = rest[c] / gens_[gi][c];
                if (bound < 0 || q < bound) bound = q;
            }
        }
        IntVec r = rest;
        for (Int k = 0; k <= bound; ++k) {
            current[gi] = k;
            self(self, gi + 1, r);
            r = r - gens_[gi];
        }
        current[gi] = 0;
    };
    rec(rec, 0, v);
    return result;
}

AperySet AffineSemigroup::apery_set(const std::set<std::size_t>& e, std::size_t cap) const {
    if (e.empty()) throw Error("apery-bound-exceeded", "empty extremal set");
    std::vector<std::size_t> non_extremal;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (!e.count(i)) non_extremal.push_back(i);

    auto in_apery = [&](const IntVec& v) {
        for (std::size_t j : e)
            if (contains(v - gens_[j])) return false;
        return true;
    };

    std::set<IntVec> visited;
    std::deque<IntVec> frontier;
    IntVec zero(ambient_dim_, Int(0));
    visited.insert(zero);
    frontier.push_back(zero);
    std::vector<IntVec> elements{zero};
    while (!frontier.empty()) {
        IntVec v = frontier.front();
        frontier.pop_front();
        for (std::size_t gi : non_extremal) {
            IntVec w = v + gens_[gi];
            if (visited.count(w)) continue;
            visited.insert(w);
            if (visited.size() > cap)
                throw Error("apery-bound-exceeded",
                            "visited more than " + std::to_string(cap) + " nodes");
            // The complement of the Apery set is closed under adding generators,
            // so pruned nodes need no successors.
            if (in_apery(w)) {
                elements.push_back(w);
                frontier.push_back(w);
            }
        }
    }
    sort_vectors(elements);
    return AperySet{this, std::move(elements), e, false};
}

QFReport AffineSemigroup::quasi_frobenius(std::size_t cap) const {
    AperySet ap = apery_set(extremal_idx_, cap);
    IntVec extremal_sum(ambient_dim_, Int(0));
    for (std::size_t j : extremal_idx_) extremal_sum = extremal_sum + gens_[j];

    QFReport report;
    for (const auto& b : ap.elements) {
        bool maximal = true;
        for (const auto& other : ap.elements) {
            if (other == b) continue;
            if (contains(other - b)) {
                maximal = false;
                break;
            }
        }
        if (maximal) report.qf_elements.push_back(b - extremal_sum);
    }
    sort_vectors(report.qf_elements);
    report.type_count = report.qf_elements.size();
    return report;
}

bool AffineSemigroup::is_normal_by_qf_criterion(std::size_t cap) const {
    AperySet ap = apery_set(extremal_idx_, cap);
    QFReport qf = quasi_frobenius(cap);
    for (const auto& q : qf.qf_elements) {
        IntVec neg = negate(q);
        if (!std::binary_search(ap.elements.begin(), ap.elements.end(), neg)) return false;
    }
    return true;
}

Int AffineSemigroup::ord(const IntVec& w) const {
    auto facs = factorizations(w);
    Int best = 0;
    for (const auto& f : facs) {
        Int s = 0;
        for (const auto& x : f) s += x;
        if (s > best) best = s;
    }
    return best;
}

bool AffineSemigroup::is_homogeneous(std::size_t cap) const {
    AperySet ap = apery_set(extremal_idx_, cap);
    for (const auto& b : ap.elements) {
        auto facs = factorizations(b);
        Int total = -1;
        for (const auto& f : facs) {
            Int s = 0;
            for (const auto& x : f) s += x;
            if (total < 0)
                total = s;
            else if (s != total)
                return false;
        }
    }
    return true;
}

}  // namespace forge
