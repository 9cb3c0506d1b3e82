#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "wge/quaternion.hpp"

namespace wge {

/// Row-major dense real matrix.
struct RealMat {
    int rows = 0, cols = 0;
    std::vector<double> v;

    RealMat() = default;
    RealMat(int rows_, int cols_, double fill = 0.0)
        : rows(rows_), cols(cols_), v(static_cast<std::size_t>(rows_) * cols_, fill) {}

    double& at(int row, int col) { return v[static_cast<std::size_t>(row) * cols + col]; }
    double at(int row, int col) const { return v[static_cast<std::size_t>(row) * cols + col]; }
    std::size_t size() const { return v.size(); }
};

/// C += A * B with A (m x p), B (p x n). Row-major, k-streamed so the inner
/// loop runs along contiguous rows of B and C.
inline void gemm_acc(const double* a, const double* b, double* c, int m, int p, int n) {
    for (int row = 0; row < m; ++row) {
        const double* arow = a + static_cast<std::size_t>(row) * p;
        double* crow = c + static_cast<std::size_t>(row) * n;
        for (int kk = 0; kk < p; ++kk) {
            const double av = arow[kk];
            if (av == 0.0) continue;
            const double* brow = b + static_cast<std::size_t>(kk) * n;
            for (int col = 0; col < n; ++col) {
                crow[col] += av * brow[col];
            }
        }
    }
}

inline RealMat matmul(const RealMat& a, const RealMat& b) {
    if (a.cols != b.rows) {
        throw std::invalid_argument("matmul: shape mismatch (" + std::to_string(a.cols) + " vs " +
                                    std::to_string(b.rows) + ")");
    }
    RealMat c(a.rows, b.cols);
    gemm_acc(a.v.data(), b.v.data(), c.v.data(), a.rows, a.cols, b.cols);
    return c;
}

inline RealMat transpose(const RealMat& a) {
    RealMat t(a.cols, a.rows);
    for (int r = 0; r < a.rows; ++r)
        for (int c = 0; c < a.cols; ++c) t.at(c, r) = a.at(r, c);
    return t;
}

// ---------------------------------------------------------------------------
// Flattened (N x 4d) view of a quaternion matrix: column blocks [r | i | j | k].

inline RealMat quat_flatten(const QuatMat& q) {
    RealMat out(q.rows, 4 * q.cols);
    const int d = q.cols;
    for (int row = 0; row < q.rows; ++row) {
        const std::size_t qoff = static_cast<std::size_t>(row) * d;
        double* dst = out.v.data() + static_cast<std::size_t>(row) * 4 * d;
        std::copy_n(q.r.data() + qoff, d, dst);
        std::copy_n(q.i.data() + qoff, d, dst + d);
        std::copy_n(q.j.data() + qoff, d, dst + 2 * d);
        std::copy_n(q.k.data() + qoff, d, dst + 3 * d);
    }
    return out;
}

inline QuatMat quat_unflatten(const RealMat& m) {
    if (m.cols % 4 != 0) throw std::invalid_argument("quat_unflatten: cols not divisible by 4");
    const int d = m.cols / 4;
    QuatMat out(m.rows, d);
    for (int row = 0; row < m.rows; ++row) {
        const double* src = m.v.data() + static_cast<std::size_t>(row) * 4 * d;
        const std::size_t qoff = static_cast<std::size_t>(row) * d;
        std::copy_n(src, d, out.r.data() + qoff);
        std::copy_n(src + d, d, out.i.data() + qoff);
        std::copy_n(src + 2 * d, d, out.j.data() + qoff);
        std::copy_n(src + 3 * d, d, out.k.data() + qoff);
    }
    return out;
}

// ---------------------------------------------------------------------------
// 4-block real form of W (x) p.
//
// With y = W (x) x written as [y_r;y_i;y_j;y_k] = B [x_r;x_i;x_j;x_k], where B
// is the 4m x 4n block matrix
//   [ Wr -Wi -Wj -Wk ]
//   [ Wi  Wr -Wk  Wj ]
//   [ Wj  Wk  Wr -Wi ]
//   [ Wk -Wj  Wi  Wr ]
// a sample-per-row layout computes Y_flat = X_flat * B^T in one real pass.

namespace detail {

// block_sign[out][in] / block_comp[out][in] describe B; comp 0..3 = r,i,j,k.
constexpr int kBlockComp[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
constexpr double kBlockSign[4][4] = {{1, -1, -1, -1}, {1, 1, -1, 1}, {1, 1, 1, -1}, {1, -1, 1, 1}};

inline const std::vector<double>& comp_of(const QuatMat& w, int c) {
    switch (c) {
        case 0: return w.r;
        case 1: return w.i;
        case 2: return w.j;
        default: return w.k;
    }
}

inline std::vector<double>& comp_of(QuatMat& w, int c) {
    switch (c) {
        case 0: return w.r;
        case 1: return w.i;
        case 2: return w.j;
        default: return w.k;
    }
}

}  // namespace detail

/// B^T for W (m x n): a 4n x 4m real matrix, ready for Y = X_flat * B^T.
inline RealMat hamilton_blocks_t(const QuatMat& w) {
    const int m = w.rows, n = w.cols;
    RealMat bt(4 * n, 4 * m);
    for (int bo = 0; bo < 4; ++bo) {
        for (int bi = 0; bi < 4; ++bi) {
            const auto& wc = detail::comp_of(w, detail::kBlockComp[bo][bi]);
            const double sign = detail::kBlockSign[bo][bi];
            // block (bo, bi) of B is sign * Wc; B^T holds its transpose at (bi, bo).
            for (int rr = 0; rr < m; ++rr) {
                const std::size_t woff = static_cast<std::size_t>(rr) * n;
                for (int cc = 0; cc < n; ++cc) {
                    bt.at(bi * n + cc, bo * m + rr) = sign * wc[woff + cc];
                }
            }
        }
    }
    return bt;
}

/// Fold a gradient w.r.t. B^T (4n x 4m) back into the four W components.
inline void fold_hamilton_blocks_grad(const RealMat& dbt, QuatMat& dw) {
    const int m = dw.rows, n = dw.cols;
    for (int bo = 0; bo < 4; ++bo) {
        for (int bi = 0; bi < 4; ++bi) {
            auto& wc = detail::comp_of(dw, detail::kBlockComp[bo][bi]);
            const double sign = detail::kBlockSign[bo][bi];
            for (int rr = 0; rr < m; ++rr) {
                const std::size_t woff = static_cast<std::size_t>(rr) * n;
                for (int cc = 0; cc < n; ++cc) {
                    wc[woff + cc] += sign * dbt.at(bi * n + cc, bo * m + rr);
                }
            }
        }
    }
}

/// Row-wise W (x) x over all rows of X: returns Y (N x m) for X (N x n).
inline QuatMat qmat_transform(const QuatMat& w, const QuatMat& x) {
    if (w.cols != x.cols) {
        throw std::invalid_argument("qmat_transform: W cols " + std::to_string(w.cols) +
                                    " vs X cols " + std::to_string(x.cols));
    }
    const RealMat bt = hamilton_blocks_t(w);
    const RealMat xf = quat_flatten(x);
    RealMat yf(x.rows, 4 * w.rows);
    gemm_acc(xf.v.data(), bt.v.data(), yf.v.data(), x.rows, 4 * w.cols, 4 * w.rows);
    return quat_unflatten(yf);
}

// ---------------------------------------------------------------------------

/// Symmetric sparse matrix in CSR form (graph adjacencies).
struct Csr {
    int n = 0;
    std::vector<int> row_ptr;  // n + 1
    std::vector<int> col_idx;
    std::vector<double> vals;

    std::size_t nnz() const { return col_idx.size(); }

    /// y = A * x applied to each column block of a dense row-major matrix.
    void multiply(const double* x, double* y, int cols) const {
        for (int row = 0; row < n; ++row) {
            double* yrow = y + static_cast<std::size_t>(row) * cols;
            std::fill_n(yrow, cols, 0.0);
            for (int e = row_ptr[row]; e < row_ptr[row + 1]; ++e) {
                const double a = vals[e];
                const double* xrow = x + static_cast<std::size_t>(col_idx[e]) * cols;
                for (int c = 0; c < cols; ++c) yrow[c] += a * xrow[c];
            }
        }
    }
};

inline QuatMat spmm(const Csr& a, const QuatMat& x) {
    if (a.n != x.rows) throw std::invalid_argument("spmm: adjacency/feature row mismatch");
    QuatMat y(x.rows, x.cols);
    a.multiply(x.r.data(), y.r.data(), x.cols);
    a.multiply(x.i.data(), y.i.data(), x.cols);
    a.multiply(x.j.data(), y.j.data(), x.cols);
    a.multiply(x.k.data(), y.k.data(), x.cols);
    return y;
}

inline RealMat spmm(const Csr& a, const RealMat& x) {
    if (a.n != x.rows) throw std::invalid_argument("spmm: adjacency/feature row mismatch");
    RealMat y(x.rows, x.cols);
    a.multiply(x.v.data(), y.v.data(), x.cols);
    return y;
}

}  // namespace wge
