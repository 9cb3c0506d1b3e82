#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

// Quaternion algebra over scalars, vectors and matrices.
//
// Storage is structure-of-arrays throughout: a quaternion vector keeps four
// parallel real arrays (r, i, j, k), so the 4-block real form of the Hamilton
// product maps onto plain real matrix passes. All arithmetic is double.

namespace wge {

struct Quat {
    double r = 0.0, i = 0.0, j = 0.0, k = 0.0;
};

inline Quat q_add(const Quat& q, const Quat& p) {
    return {q.r + p.r, q.i + p.i, q.j + p.j, q.k + p.k};
}

inline Quat q_scale(double lambda, const Quat& q) {
    return {lambda * q.r, lambda * q.i, lambda * q.j, lambda * q.k};
}

inline Quat q_conjugate(const Quat& q) {
    return {q.r, -q.i, -q.j, -q.k};
}

inline double q_norm(const Quat& q) {
    return std::sqrt(q.r * q.r + q.i * q.i + q.j * q.j + q.k * q.k);
}

/// Unit quaternion q / ||q||. The zero quaternion has no direction; during
/// training it signals a degenerate relation embedding, so it is an error.
inline Quat q_normalize(const Quat& q) {
    const double n = q_norm(q);
    if (n == 0.0) {
        throw std::domain_error("q_normalize: zero quaternion");
    }
    const double inv = 1.0 / n;
    return {q.r * inv, q.i * inv, q.j * inv, q.k * inv};
}

/// Hamilton product q (x) p. Non-commutative.
inline Quat hamilton(const Quat& q, const Quat& p) {
    return {
        q.r * p.r - q.i * p.i - q.j * p.j - q.k * p.k,
        q.i * p.r + q.r * p.i - q.k * p.j + q.j * p.k,
        q.j * p.r + q.k * p.i + q.r * p.j - q.i * p.k,
        q.k * p.r - q.j * p.i + q.i * p.j + q.r * p.k,
    };
}

/// Component-wise product (the "*" coupling operator), not Hamilton.
inline Quat q_elementwise(const Quat& q, const Quat& p) {
    return {q.r * p.r, q.i * p.i, q.j * p.j, q.k * p.k};
}

// ---------------------------------------------------------------------------

/// n quaternions as four parallel real arrays of common length.
struct QuatVec {
    std::vector<double> r, i, j, k;

    QuatVec() = default;
    explicit QuatVec(std::size_t n) : r(n, 0.0), i(n, 0.0), j(n, 0.0), k(n, 0.0) {}

    std::size_t size() const { return r.size(); }

    Quat at(std::size_t t) const { return {r[t], i[t], j[t], k[t]}; }

    void set(std::size_t t, const Quat& q) {
        r[t] = q.r;
        i[t] = q.i;
        j[t] = q.j;
        k[t] = q.k;
    }
};

inline void check_same_length(const QuatVec& q, const QuatVec& p, const char* what) {
    if (q.size() != p.size()) {
        throw std::invalid_argument(std::string(what) + ": length mismatch (" +
                                    std::to_string(q.size()) + " vs " + std::to_string(p.size()) + ")");
    }
}

inline QuatVec q_add(const QuatVec& q, const QuatVec& p) {
    check_same_length(q, p, "q_add");
    QuatVec out(q.size());
    for (std::size_t t = 0; t < q.size(); ++t) out.set(t, q_add(q.at(t), p.at(t)));
    return out;
}

/// Entry-wise Hamilton product of two quaternion vectors.
inline QuatVec hamilton(const QuatVec& q, const QuatVec& p) {
    check_same_length(q, p, "hamilton");
    QuatVec out(q.size());
    for (std::size_t t = 0; t < q.size(); ++t) out.set(t, hamilton(q.at(t), p.at(t)));
    return out;
}

inline QuatVec q_elementwise(const QuatVec& q, const QuatVec& p) {
    check_same_length(q, p, "q_elementwise");
    QuatVec out(q.size());
    for (std::size_t t = 0; t < q.size(); ++t) out.set(t, q_elementwise(q.at(t), p.at(t)));
    return out;
}

inline QuatVec q_conjugate(const QuatVec& q) {
    QuatVec out(q.size());
    for (std::size_t t = 0; t < q.size(); ++t) out.set(t, q_conjugate(q.at(t)));
    return out;
}

/// Entry-wise unit normalization.
inline QuatVec q_normalize(const QuatVec& q) {
    QuatVec out(q.size());
    for (std::size_t t = 0; t < q.size(); ++t) out.set(t, q_normalize(q.at(t)));
    return out;
}

/// Quaternion inner product: sum over entries of the four component dots.
inline double q_inner(const QuatVec& q, const QuatVec& p) {
    check_same_length(q, p, "q_inner");
    double s = 0.0;
    for (std::size_t t = 0; t < q.size(); ++t) {
        s += q.r[t] * p.r[t] + q.i[t] * p.i[t] + q.j[t] * p.j[t] + q.k[t] * p.k[t];
    }
    return s;
}

// ---------------------------------------------------------------------------

/// m x n quaternion matrix, four parallel row-major real matrices.
struct QuatMat {
    int rows = 0, cols = 0;
    std::vector<double> r, i, j, k;

    QuatMat() = default;
    QuatMat(int rows_, int cols_)
        : rows(rows_),
          cols(cols_),
          r(static_cast<std::size_t>(rows_) * cols_, 0.0),
          i(static_cast<std::size_t>(rows_) * cols_, 0.0),
          j(static_cast<std::size_t>(rows_) * cols_, 0.0),
          k(static_cast<std::size_t>(rows_) * cols_, 0.0) {}

    std::size_t size() const { return r.size(); }

    Quat at(int row, int col) const {
        const std::size_t idx = static_cast<std::size_t>(row) * cols + col;
        return {r[idx], i[idx], j[idx], k[idx]};
    }

    void set(int row, int col, const Quat& q) {
        const std::size_t idx = static_cast<std::size_t>(row) * cols + col;
        r[idx] = q.r;
        i[idx] = q.i;
        j[idx] = q.j;
        k[idx] = q.k;
    }

    QuatVec row(int row_) const {
        QuatVec out(static_cast<std::size_t>(cols));
        const std::size_t off = static_cast<std::size_t>(row_) * cols;
        for (int c = 0; c < cols; ++c) {
            out.r[c] = r[off + c];
            out.i[c] = i[off + c];
            out.j[c] = j[off + c];
            out.k[c] = k[off + c];
        }
        return out;
    }

    void set_row(int row_, const QuatVec& v) {
        const std::size_t off = static_cast<std::size_t>(row_) * cols;
        for (int c = 0; c < cols; ++c) {
            r[off + c] = v.r[c];
            i[off + c] = v.i[c];
            j[off + c] = v.j[c];
            k[off + c] = v.k[c];
        }
    }

    static QuatMat identity(int n) {
        QuatMat w(n, n);
        for (int d = 0; d < n; ++d) w.set(d, d, {1.0, 0.0, 0.0, 0.0});
        return w;
    }
};

/// W (x) p for a quaternion matrix W (m x n) and vector p (length n),
/// accumulated entry-wise from Hamilton products.
inline QuatVec matvec_hamilton(const QuatMat& w, const QuatVec& p) {
    if (static_cast<std::size_t>(w.cols) != p.size()) {
        throw std::invalid_argument("matvec_hamilton: shape mismatch (" + std::to_string(w.cols) +
                                    " cols vs length " + std::to_string(p.size()) + ")");
    }
    QuatVec out(static_cast<std::size_t>(w.rows));
    for (int m = 0; m < w.rows; ++m) {
        Quat acc;
        for (int n = 0; n < w.cols; ++n) {
            acc = q_add(acc, hamilton(w.at(m, n), p.at(n)));
        }
        out.set(m, acc);
    }
    return out;
}

}  // namespace wge
