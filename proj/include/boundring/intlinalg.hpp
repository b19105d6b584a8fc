#pragma once

// Exact integer/rational linear algebra helpers: rank, Smith normal form
// based lattice membership, and the inertia of a symmetric rational matrix.

#include "boundring/numeric.hpp"

#include <array>
#include <cstddef>
#include <tuple>
#include <vector>

namespace boundring {

inline int rationalRank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[row], m[piv]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rat f = m[r][col] / m[row][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

inline int latticeRank(const std::vector<VecI>& vecs) {
    std::vector<std::vector<Rat>> m;
    for (const auto& v : vecs) {
        std::vector<Rat> row;
        for (const Int& x : v) row.emplace_back(x);
        m.push_back(std::move(row));
    }
    return rationalRank(std::move(m));
}

namespace detail {

// Diagonalize M by unimodular row/column operations, tracking the row
// transform U so that membership of U*e in the diagonal lattice can be read
// off. Divisibility normalization of the diagonal is not needed for that.
struct DiagonalizedLattice {
    std::vector<std::vector<Int>> U;    // rows x rows, unimodular
    std::vector<Int> diag;              // nonzero diagonal entries d_0..d_{r-1}
    std::size_t rows = 0;
};

inline DiagonalizedLattice diagonalizeColumns(std::vector<std::vector<Int>> M) {
    DiagonalizedLattice out;
    std::size_t rows = M.size();
    std::size_t cols = rows ? M[0].size() : 0;
    out.rows = rows;
    out.U.assign(rows, std::vector<Int>(rows, 0));
    for (std::size_t i = 0; i < rows; ++i) out.U[i][i] = 1;

    auto rowOp = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t c = 0; c < cols; ++c) M[dst][c] -= q * M[src][c];
        for (std::size_t c = 0; c < rows; ++c) out.U[dst][c] -= q * out.U[src][c];
    };
    auto swapRows = [&](std::size_t a, std::size_t b) {
        std::swap(M[a], M[b]);
        std::swap(out.U[a], out.U[b]);
    };
    auto colOp = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t r = 0; r < rows; ++r) M[r][dst] -= q * M[r][src];
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // locate a smallest-magnitude nonzero pivot in the trailing block
        std::size_t pr = rows, pc = cols;
        Int best = 0;
        for (std::size_t r = t; r < rows; ++r)
            for (std::size_t c = t; c < cols; ++c) {
                if (M[r][c] == 0) continue;
                Int a = abs(M[r][c]);
                if (pr == rows || a < best) {
                    best = a;
                    pr = r;
                    pc = c;
                }
            }
        if (pr == rows) break;
        swapRows(t, pr);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != t) std::swap(M[r][t], M[r][pc]);
        std::swap(M[t][t], M[t][pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (M[r][t] == 0) continue;
                Int q = M[r][t] / M[t][t];
                rowOp(r, t, q);
                if (M[r][t] != 0) {
                    swapRows(t, r);
                    clean = false;
                }
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (M[t][c] == 0) continue;
                Int q = M[t][c] / M[t][t];
                colOp(c, t, q);
                if (M[t][c] != 0) {
                    for (std::size_t r = 0; r < rows; ++r) std::swap(M[r][t], M[r][c]);
                    clean = false;
                }
            }
        }
        out.diag.push_back(M[t][t]);
        ++t;
    }
    return out;
}

}  // namespace detail

// Does e lie in the subgroup of Z^n generated by gens?
inline bool latticeContains(const std::vector<VecI>& gens, const VecI& e) {
    if (e.empty()) return true;
    std::size_t n = e.size();
    std::vector<std::vector<Int>> M(n, std::vector<Int>(std::max<std::size_t>(gens.size(), 1), 0));
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) M[i][j] = gens[j][i];
    auto d = detail::diagonalizeColumns(std::move(M));
    std::vector<Int> c(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c[i] += d.U[i][j] * e[j];
    for (std::size_t i = 0; i < n; ++i) {
        if (i < d.diag.size()) {
            if (c[i] % d.diag[i] != 0) return false;
        } else if (c[i] != 0) {
            return false;
        }
    }
    return true;
}

// Is the subgroup generated by gens all of Z^n?
inline bool latticeIsFull(const std::vector<VecI>& gens, std::size_t n) {
    std::vector<std::vector<Int>> M(n, std::vector<Int>(std::max<std::size_t>(gens.size(), 1), 0));
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) M[i][j] = gens[j][i];
    auto d = detail::diagonalizeColumns(std::move(M));
    if (d.diag.size() != n) return false;
    for (const Int& x : d.diag)
        if (abs(x) != 1) return false;
    return true;
}

// Signature (positives, negatives, zeros) of a symmetric rational matrix,
// computed by congruence diagonalization.
inline std::array<int, 3> symmetricInertia(std::vector<std::vector<Rat>> m) {
    int pos = 0, neg = 0, zero = 0;
    std::size_t n = m.size();
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        // prefer a nonzero diagonal pivot
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && m[i][i] != 0) {
                p = i;
                break;
            }
        if (p == n) {
            // all remaining diagonal entries vanish; a nonzero off-diagonal
            // pair contributes a hyperbolic (+1,-1) block
            std::size_t a = n, b = n;
            for (std::size_t i = 0; i < n && a == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!done[i] && !done[j] && m[i][j] != 0) {
                        a = i;
                        b = j;
                        break;
                    }
            if (a == n) {
                for (std::size_t i = 0; i < n; ++i)
                    if (!done[i]) ++zero;
                break;
            }
            // congruence: row/col a += row/col b, making m[a][a] = 2*m[a][b] != 0
            for (std::size_t j = 0; j < n; ++j) m[a][j] += m[b][j];
            for (std::size_t i = 0; i < n; ++i) m[i][a] += m[i][b];
            p = a;
        }
        Rat piv = m[p][p];
        (piv > 0 ? pos : neg)++;
        done[p] = true;
        std::vector<Rat> f(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i]) f[i] = m[i][p] / piv;
        // symmetric rank-1 elimination of row/column p from the active block
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || f[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) m[i][j] -= f[i] * m[p][j];
        }
    }
    return {pos, neg, zero};
}

}  // namespace boundring
