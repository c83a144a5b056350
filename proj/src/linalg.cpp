#include "forge/linalg.hpp"

#include <algorithm>

namespace forge {

RatMat RatMat::transpose() const {
    RatMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMat RatMat::mul(const RatMat& other) const {
    if (cols_ != other.rows_) throw Error("dimension-mismatch", "matrix product shape");
    RatMat p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                p.at(i, j) += at(i, k) * other.at(k, j);
        }
    return p;
}

bool RatMat::is_zero() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) return false;
    return true;
}

RatMat RatMat::identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::from_rows(const std::vector<std::vector<long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    RatMat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw Error("dimension-mismatch", "ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RatMat RatMat::from_int_columns(const std::vector<IntVec>& cols) {
    std::size_t c = cols.size();
    std::size_t r = c ? cols[0].size() : 0;
    RatMat m(r, c);
    for (std::size_t j = 0; j < c; ++j) {
        if (cols[j].size() != r) throw Error("dimension-mismatch", "ragged columns");
        for (std::size_t i = 0; i < r; ++i) m.at(i, j) = Rat(cols[j][i]);
    }
    return m;
}

std::size_t rank_rational(const RatMat& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    // Clear denominators row by row, then run Bareiss on the integer matrix.
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < cols; ++j) l = lcm(l, m.at(i, j).get_den());
        for (std::size_t j = 0; j < cols; ++j) {
            Rat x = m.at(i, j) * Rat(l);
            x.canonicalize();
            a[i][j] = x.get_num();
        }
    }

    std::size_t rank = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[rank], a[piv]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

std::optional<std::vector<Rat>> solve_nonneg(const RatMat& a, const std::vector<Rat>& b) {
    std::size_t m = a.rows(), n = a.cols();
    if (b.size() != m) throw Error("dimension-mismatch", "rhs length");

    // Phase-1 tableau [A | I | b] with b >= 0; minimize the sum of artificials.
    std::vector<std::vector<Rat>> t(m, std::vector<Rat>(n + m + 1, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        Rat s = b[i] < 0 ? Rat(-1) : Rat(1);
        for (std::size_t j = 0; j < n; ++j) t[i][j] = s * a.at(i, j);
        t[i][n + i] = 1;
        t[i][n + m] = s * b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    // Reduced cost of column j (artificials cost 1, priced out over the basis).
    auto reduced_cost = [&](std::size_t j) {
        Rat c = j >= n ? Rat(1) : Rat(0);
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] >= n) c -= t[i][j];
        return c;
    };

    for (;;) {
        // Bland: smallest-index entering column with negative reduced cost.
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m; ++j) {
            if (reduced_cost(j) < 0) {
                enter = j;
                break;
            }
        }
        if (enter == n + m) break;

        std::size_t leave = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][n + m] / t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // unbounded direction; cannot happen in phase 1

        Rat piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (std::size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    Rat objective = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n) objective += t[i][n + m];
    if (objective != 0) return std::nullopt;

    std::vector<Rat> x(n, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = t[i][n + m];
    return x;
}

std::vector<std::size_t> reduced_homology_ranks(const std::vector<RatMat>& boundaries) {
    std::size_t p = boundaries.size();
    if (p == 0) return {};
    for (std::size_t k = 0; k + 1 < p; ++k) {
        if (boundaries[k].cols() != boundaries[k + 1].rows())
            throw Error("not-a-complex", "chain group dimensions do not line up");
        if (!boundaries[k].mul(boundaries[k + 1]).is_zero())
            throw Error("not-a-complex", "boundary composition is nonzero");
    }
    std::vector<std::size_t> ranks(p);
    for (std::size_t k = 0; k < p; ++k) ranks[k] = rank_rational(boundaries[k]);
    std::vector<std::size_t> h(p);
    for (std::size_t k = 0; k < p; ++k) {
        std::size_t dim = boundaries[k].cols();
        std::size_t img_above = (k + 1 < p) ? ranks[k + 1] : 0;
        h[k] = dim - ranks[k] - img_above;
    }
    return h;
}

}  // namespace forge
