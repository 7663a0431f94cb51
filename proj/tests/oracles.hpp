#pragma once

// Independent reference implementations used as test oracles.  These stay
// deliberately naive (dense, textbook) and must not share code with the
// library paths they check.

#include <algorithm>
#include <random>
#include <vector>

#include "symhom/sparse_matrix.hpp"

namespace oracle {

using symhom::Int;
using symhom::SparseIntMatrix;

using DenseMat = std::vector<std::vector<Int>>;

inline DenseMat to_dense(const SparseIntMatrix& m) {
    DenseMat d(m.rows(), std::vector<Int>(m.cols(), Int(0)));
    for (const auto& [rc, v] : m.entries()) d[rc.first][rc.second] = v;
    return d;
}

// Textbook dense Smith normal form by repeated gcd reduction.
inline std::vector<Int> dense_snf(DenseMat a) {
    int rows = (int)a.size();
    int cols = rows ? (int)a[0].size() : 0;
    int n = std::min(rows, cols);
    std::vector<Int> diag;
    int t = 0;
    auto nonzero_at_or_after = [&](int& pr, int& pc) {
        for (int r = t; r < rows; ++r)
            for (int c = t; c < cols; ++c)
                if (a[r][c] != 0) {
                    pr = r;
                    pc = c;
                    return true;
                }
        return false;
    };
    while (t < n) {
        int pr, pc;
        if (!nonzero_at_or_after(pr, pc)) break;
        std::swap(a[t], a[pr]);
        for (int r = 0; r < rows; ++r) std::swap(a[r][t], a[r][pc]);
        for (;;) {
            bool again = false;
            for (int r = t + 1; r < rows; ++r) {
                while (a[r][t] != 0) {
                    Int q = a[t][t] == 0 ? Int(0) : Int(a[r][t] / a[t][t]);
                    for (int c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
                    if (a[r][t] != 0) {
                        std::swap(a[r], a[t]);
                        again = true;
                    }
                }
            }
            for (int c = t + 1; c < cols; ++c) {
                while (a[t][c] != 0) {
                    Int q = a[t][t] == 0 ? Int(0) : Int(a[t][c] / a[t][t]);
                    for (int r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
                    if (a[t][c] != 0) {
                        for (int r = t; r < rows; ++r) std::swap(a[r][c], a[r][t]);
                        again = true;
                    }
                }
            }
            if (again) continue;
            // pivot must divide the rest of the submatrix
            bool fixed = false;
            for (int r = t + 1; r < rows && !fixed; ++r)
                for (int c = t + 1; c < cols && !fixed; ++c)
                    if (a[t][t] != 0 && a[r][c] % a[t][t] != 0) {
                        for (int cc = t; cc < cols; ++cc) a[t][cc] += a[r][cc];
                        fixed = true;
                    }
            if (!fixed) break;
        }
        diag.push_back(a[t][t] < 0 ? Int(-a[t][t]) : a[t][t]);
        ++t;
    }
    diag.resize(n, Int(0));
    return diag;
}

// Dense rank over Q by fraction-free elimination.
inline int dense_rank_q(DenseMat a) {
    int rows = (int)a.size();
    int cols = rows ? (int)a[0].size() : 0;
    int rank = 0;
    int cr = 0;
    for (int c = 0; c < cols && cr < rows; ++c) {
        int p = -1;
        for (int r = cr; r < rows; ++r)
            if (a[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(a[cr], a[p]);
        for (int r = cr + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            Int f1 = a[cr][c], f2 = a[r][c];
            for (int cc = 0; cc < cols; ++cc) a[r][cc] = f1 * a[r][cc] - f2 * a[cr][cc];
        }
        ++cr;
        ++rank;
    }
    return rank;
}

inline SparseIntMatrix random_sparse(int rows, int cols, double density, int value_range,
                                     std::mt19937& rng) {
    SparseIntMatrix m(rows, cols);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> val(-value_range, value_range);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (coin(rng) < density) m.set(r, c, Int(val(rng)));
    return m;
}

}  // namespace oracle
