#pragma once

// Independent reference implementations used only by tests. Everything here
// favours the dumbest possible algorithm over speed so that agreement with
// the library is meaningful.

#include <optional>
#include <utility>
#include <vector>

#include "grshull/gf.hpp"
#include "grshull/grs.hpp"
#include "grshull/lattice.hpp"

namespace grshull::oracle {

// Colexicographically first lattice point found by scanning e2 upward.
inline std::optional<std::pair<long long, long long>> brute_first_point(
    const Lattice& lat, long long window) {
    for (long long e2 = 1; e2 <= window; ++e2)
        for (long long e1 = 0; e1 < e2; ++e1)
            if ((e1 + e2 - lat.a) % lat.b == 0 && (e2 - e1) % lat.c == 0)
                return std::make_pair(e1, e2);
    return std::nullopt;
}

// All lattice points with e2 < k, colexicographic order.
inline std::vector<std::pair<long long, long long>> brute_points_below(
    const Lattice& lat, long long k) {
    std::vector<std::pair<long long, long long>> pts;
    for (long long e2 = 1; e2 < k; ++e2)
        for (long long e1 = 0; e1 < e2; ++e1)
            if ((e1 + e2 - lat.a) % lat.b == 0 && (e2 - e1) % lat.c == 0)
                pts.emplace_back(e1, e2);
    return pts;
}

// Term-by-term geometric sum sum_{i=0}^{gamma-1} zeta_gamma^{i*n}.
inline FieldElement term_sum(const Field& field, long long gamma, long long n) {
    FieldElement z = field.root_of_unity(gamma);
    FieldElement acc = field.zero();
    FieldElement zn = z.pow(n);
    FieldElement cur = field.one();
    for (long long i = 0; i < gamma; ++i) {
        acc = acc + cur;
        cur = cur * zn;
    }
    return acc;
}

// Multiplicative order by repeated multiplication.
inline long long brute_order(const FieldElement& x) {
    FieldElement cur = x;
    long long ord = 1;
    while (!(cur == x.field().one())) {
        cur = cur * x;
        ++ord;
    }
    return ord;
}

// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t piv = pr;
        while (piv < rows && m[piv][pc].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[pr], m[piv]);
        const FieldElement inv = m[pr][pc].inv();
        for (std::size_t c = pc; c < cols; ++c) m[pr][c] = m[pr][c] * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pr || m[r][pc].is_zero()) continue;
            const FieldElement f = m[r][pc];
            for (std::size_t c = pc; c < cols; ++c)
                m[r][c] = m[r][c] - f * m[pr][c];
        }
        pivots.push_back(pc);
        ++pr;
    }
    return pivots;
}

// Basis of the null space of g, as rows of an (n - rank) x n matrix.
inline Matrix kernel_basis(const Matrix& g) {
    Matrix m = g;
    auto pivots = rref(m);
    const std::size_t n = g.empty() ? 0 : g[0].size();
    const Field& f = g[0][0].field();
    std::vector<bool> is_pivot(n, false);
    for (auto pc : pivots) is_pivot[pc] = true;
    Matrix basis;
    for (std::size_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<FieldElement> vec(n, f.zero());
        vec[fc] = f.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            vec[pivots[r]] = -m[r][fc];
        basis.push_back(std::move(vec));
    }
    return basis;
}

// All w-subsets of {0..n-1} via odometer stepping; f is called per subset
// and may return false to stop early.
template <typename F>
inline void for_each_subset(std::size_t n, std::size_t w, F&& f) {
    if (w > n) return;
    std::vector<std::size_t> idx(w);
    for (std::size_t i = 0; i < w; ++i) idx[i] = i;
    while (true) {
        if (!f(idx)) return;
        std::size_t i = w;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - w) break;
            if (i == 0) return;
        }
        ++idx[i];
        for (std::size_t j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Exact minimum distance of the row space of g: the smallest w such that
// some w columns of a parity check matrix are linearly dependent.
inline long long min_distance_subsets(const Matrix& g) {
    const std::size_t n = g[0].size();
    Matrix h = kernel_basis(g);
    for (std::size_t w = 1; w <= n; ++w) {
        bool dependent = false;
        for_each_subset(n, w, [&](const std::vector<std::size_t>& idx) {
            Matrix sub;
            for (const auto& row : h) {
                std::vector<FieldElement> r;
                for (auto c : idx) r.push_back(row[c]);
                sub.push_back(std::move(r));
            }
            if (matrix_rank(std::move(sub)) < static_cast<long long>(w)) {
                dependent = true;
                return false;
            }
            return true;
        });
        if (dependent) return static_cast<long long>(w);
    }
    return static_cast<long long>(n) + 1;  // unreachable for a proper code
}

// Whether every k columns of the k x n matrix g are linearly independent.
inline bool all_k_minors_nonsingular(const Matrix& g) {
    const std::size_t k = g.size(), n = g[0].size();
    bool ok = true;
    for_each_subset(n, k, [&](const std::vector<std::size_t>& idx) {
        Matrix sub;
        for (const auto& row : g) {
            std::vector<FieldElement> r;
            for (auto c : idx) r.push_back(row[c]);
            sub.push_back(std::move(r));
        }
        if (matrix_rank(std::move(sub)) < static_cast<long long>(k)) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

}  // namespace grshull::oracle
