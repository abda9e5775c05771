#pragma once

// Internal dense double-precision matrix helpers (row-major). Not installed.

#include <cmath>
#include <stdexcept>
#include <vector>

namespace tailspec::detail {

struct Dense {
    int rows = 0, cols = 0;
    std::vector<double> a;

    Dense() = default;
    Dense(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

    double& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    double at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Dense identity(int n) {
        Dense m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }
};

inline Dense operator*(const Dense& x, const Dense& y) {
    if (x.cols != y.rows) throw std::invalid_argument("Dense: shape mismatch");
    Dense z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            double v = x.at(i, k);
            if (v == 0.0) continue;
            for (int j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
        }
    return z;
}

inline Dense operator-(const Dense& x, const Dense& y) {
    Dense z(x.rows, x.cols);
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.a[i] - y.a[i];
    return z;
}

inline Dense operator+(const Dense& x, const Dense& y) {
    Dense z(x.rows, x.cols);
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.a[i] + y.a[i];
    return z;
}

inline double frobenius(const Dense& m) {
    double s = 0.0;
    for (double v : m.a) s += v * v;
    return std::sqrt(s);
}

// LU with partial pivoting; returns false on exact singularity.
// perm_sign receives the permutation parity.
inline bool lu_factor(Dense& m, std::vector<int>& piv, double& perm_sign) {
    const int n = m.rows;
    piv.resize(n);
    perm_sign = 1.0;
    for (int k = 0; k < n; ++k) {
        int p = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(m.at(i, k)) > std::abs(m.at(p, k))) p = i;
        piv[k] = p;
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            perm_sign = -perm_sign;
        }
        if (m.at(k, k) == 0.0) return false;
        for (int i = k + 1; i < n; ++i) {
            double f = m.at(i, k) / m.at(k, k);
            m.at(i, k) = f;
            for (int j = k + 1; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    return true;
}

inline double lu_det(Dense m) {
    std::vector<int> piv;
    double sign;
    if (!lu_factor(m, piv, sign)) return 0.0;
    double det = sign;
    for (int i = 0; i < m.rows; ++i) det *= m.at(i, i);
    return det;
}

inline void lu_solve_inplace(const Dense& lu, const std::vector<int>& piv,
                             std::vector<double>& b) {
    const int n = lu.rows;
    // multipliers travel with their rows during factorization, so the
    // whole permutation is applied to b before the triangular sweeps
    for (int k = 0; k < n; ++k) std::swap(b[k], b[piv[k]]);
    for (int k = 0; k < n; ++k)
        for (int i = k + 1; i < n; ++i) b[i] -= lu.at(i, k) * b[k];
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i + 1; j < n; ++j) b[i] -= lu.at(i, j) * b[j];
        b[i] /= lu.at(i, i);
    }
}

// returns false on singularity
inline bool invert(const Dense& m, Dense& inv) {
    Dense lu = m;
    std::vector<int> piv;
    double sign;
    if (!lu_factor(lu, piv, sign)) return false;
    const int n = m.rows;
    inv = Dense(n, n);
    std::vector<double> col(n);
    for (int j = 0; j < n; ++j) {
        std::fill(col.begin(), col.end(), 0.0);
        col[j] = 1.0;
        lu_solve_inplace(lu, piv, col);
        for (int i = 0; i < n; ++i) inv.at(i, j) = col[i];
    }
    return true;
}

}  // namespace tailspec::detail
